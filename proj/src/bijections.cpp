#include "catstat/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace catstat {

namespace {

const Pattern& pattern321() {
    static const Pattern p(std::vector<int>{3, 2, 1});
    return p;
}

const Pattern& pattern132() {
    static const Pattern p(std::vector<int>{1, 3, 2});
    return p;
}

void require_avoids(const Permutation& pi, const Pattern& pattern, const char* name) {
    if (contains(pi, pattern))
        throw std::invalid_argument(std::string("permutation contains ") + name);
}

// Splits the word into groups (one up-step, then k_i down-steps) and
// returns the k_i.
std::vector<int> down_runs(const DyckPath& path) {
    std::vector<int> runs;
    runs.reserve(static_cast<size_t>(path.semilength()));
    for (int k = 0; k < path.length(); ++k) {
        if (path.up(k)) runs.push_back(0);
        else ++runs.back();
    }
    return runs;
}

}  // namespace

CrossArray CrossArray::of(const Permutation& pi) {
    CrossArray a;
    a.n = pi.size();
    a.crosses.reserve(static_cast<size_t>(a.n));
    for (int i = 1; i <= a.n; ++i) a.crosses.emplace_back(i, pi.at(i));
    return a;
}

std::vector<int> staircase_profile(const CrossArray& array, const StaircaseSpec& spec) {
    const int n = array.n;
    std::vector<int> lo(static_cast<size_t>(n), 0), hi(static_cast<size_t>(n), n);
    for (auto [row, col] : array.crosses) {
        if (spec.constrain == StaircaseSpec::Constrain::excedance_crosses && col <= row) continue;
        int& bound = (spec.side == StaircaseSpec::Side::left_of_path) ? lo[static_cast<size_t>(row - 1)]
                                                                      : hi[static_cast<size_t>(row - 1)];
        if (spec.side == StaircaseSpec::Side::left_of_path)
            bound = std::max(bound, col);
        else
            bound = std::min(bound, col - 1);
    }
    std::vector<int> c(static_cast<size_t>(n), 0);
    // The feasible profiles form a lattice; the two proximity objectives
    // pick its extreme elements, which the one-directional passes compute.
    const bool maximize = !(spec.side == StaircaseSpec::Side::left_of_path &&
                            spec.proximity == StaircaseSpec::Proximity::hug_diagonal);
    if (maximize) {
        int next = n;
        for (int i = n; i >= 1; --i) {
            next = std::min(next, hi[static_cast<size_t>(i - 1)]);
            c[static_cast<size_t>(i - 1)] = next;
        }
    } else {
        int prev = 0;
        for (int i = 1; i <= n; ++i) {
            prev = std::max(prev, lo[static_cast<size_t>(i - 1)]);
            c[static_cast<size_t>(i - 1)] = prev;
        }
    }
    for (int i = 1; i <= n; ++i) {
        const size_t k = static_cast<size_t>(i - 1);
        if (c[k] < lo[k] || c[k] > hi[k] || c[k] < 0 || c[k] > n)
            throw std::logic_error("staircase constraints infeasible");
    }
    return c;
}

DyckPath read_staircase(const std::vector<int>& profile, const StaircaseSpec& spec) {
    const int n = static_cast<int>(profile.size());
    std::vector<bool> ups;
    ups.reserve(static_cast<size_t>(2 * n));
    const bool up_on_right = spec.reading == StaircaseSpec::Reading::up_on_right_move;
    int col = 0;
    for (int i = 1; i <= n; ++i) {
        for (; col < profile[static_cast<size_t>(i - 1)]; ++col) ups.push_back(up_on_right);
        ups.push_back(!up_on_right);  // the i-th down move
    }
    for (; col < n; ++col) ups.push_back(up_on_right);
    return DyckPath(std::move(ups));
}

DyckPath rs(const Permutation& pi) {
    require_avoids(pi, pattern321(), "321");
    const int n = pi.size();
    std::vector<bool> present(static_cast<size_t>(n + 2), false);
    std::vector<bool> ups;
    ups.reserve(static_cast<size_t>(2 * n));
    int a = 0;  // largest j with 1..j all seen
    for (int i = 1; i <= n; ++i) {
        const int val = pi.at(i);
        present[static_cast<size_t>(val)] = true;
        while (a + 1 <= n && present[static_cast<size_t>(a + 1)]) ++a;
        ups.push_back(true);
        for (int k = 0; k < a - val + 1; ++k) ups.push_back(false);
    }
    return DyckPath(std::move(ups));
}

DyckPath rs_via_minima(const Permutation& pi) {
    require_avoids(pi, pattern321(), "321");
    const int n = pi.size();
    if (n == 0) return DyckPath();
    // Right-to-left minima positions, left to right.
    std::vector<int> pos;
    int best = n + 1;
    for (int i = n; i >= 1; --i) {
        if (pi.at(i) < best) {
            best = pi.at(i);
            pos.push_back(i);
        }
    }
    std::reverse(pos.begin(), pos.end());
    std::vector<bool> ups;
    ups.reserve(static_cast<size_t>(2 * n));
    auto push = [&ups](int count, bool up) {
        for (int k = 0; k < count; ++k) ups.push_back(up);
    };
    push(pos.front(), true);
    for (size_t j = 1; j < pos.size(); ++j) {
        push(pi.at(pos[j]) - pi.at(pos[j - 1]), false);
        push(pos[j] - pos[j - 1], true);
    }
    push(n + 1 - pi.at(pos.back()), false);
    return DyckPath(std::move(ups));
}

DyckPath rs_via_staircase(const Permutation& pi) {
    require_avoids(pi, pattern321(), "321");
    StaircaseSpec spec;
    spec.constrain = StaircaseSpec::Constrain::all_crosses;
    spec.side = StaircaseSpec::Side::right_of_path;
    spec.proximity = StaircaseSpec::Proximity::hug_diagonal;
    spec.reading = StaircaseSpec::Reading::up_on_down_move;
    return read_staircase(staircase_profile(CrossArray::of(pi), spec), spec);
}

namespace {

// Unplaced positions receive the unused values in increasing order; for
// all three reconstructions those are exactly the excedance positions.
Permutation fill_ascending(std::vector<int> values, std::vector<bool> used) {
    int next = 1;
    for (int& v : values) {
        if (v != 0) continue;
        while (used[static_cast<size_t>(next)]) ++next;
        v = next;
        used[static_cast<size_t>(next)] = true;
    }
    return Permutation(std::move(values));
}

}  // namespace

Permutation rs_inverse(const DyckPath& path) {
    const int n = path.semilength();
    const std::vector<int> runs = down_runs(path);
    std::vector<int> values(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n + 1), false);
    int a = 0;
    for (int i = 1; i <= n; ++i) {
        a += runs[static_cast<size_t>(i - 1)];
        if (runs[static_cast<size_t>(i - 1)] > 0) {
            const int val = a - runs[static_cast<size_t>(i - 1)] + 1;
            values[static_cast<size_t>(i - 1)] = val;
            used[static_cast<size_t>(val)] = true;
        }
    }
    return fill_ascending(std::move(values), std::move(used));
}

DyckPath krat(const Permutation& pi) {
    require_avoids(pi, pattern132(), "132");
    const int n = pi.size();
    std::vector<bool> ups;
    ups.reserve(static_cast<size_t>(2 * n));
    int prev_height = 0;
    for (int j = 1; j <= n; ++j) {
        int h = 0;
        for (int k = j + 1; k <= n; ++k)
            if (pi.at(k) > pi.at(j)) ++h;
        const int rises = h + 1 - prev_height;
        if (rises < 0) throw std::logic_error("krat height sequence not realizable");
        for (int k = 0; k < rises; ++k) ups.push_back(true);
        ups.push_back(false);
        prev_height = h;
    }
    return DyckPath(std::move(ups));
}

Permutation krat_inverse(const DyckPath& path) {
    const int n = path.semilength();
    std::vector<int> values;
    values.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n + 2), false);
    int width = n;  // free columns strictly left of the staircase, row by row
    for (int k = 0; k < path.length(); ++k) {
        if (path.up(k)) {
            --width;
        } else {
            int col = width + 1;
            while (col <= n && used[static_cast<size_t>(col)]) ++col;
            if (col > n) throw std::logic_error("krat reconstruction ran out of columns");
            used[static_cast<size_t>(col)] = true;
            values.push_back(col);
        }
    }
    return Permutation(std::move(values));
}

DyckPath staircase_bijection(const Permutation& pi, StairVariant variant) {
    if (variant == StairVariant::bij4) return staircase_bijection(inverse(pi), StairVariant::bjs);
    require_avoids(pi, pattern321(), "321");
    StaircaseSpec spec;
    spec.reading = StaircaseSpec::Reading::up_on_right_move;
    if (variant == StairVariant::bjs) {
        spec.constrain = StaircaseSpec::Constrain::excedance_crosses;
        spec.side = StaircaseSpec::Side::right_of_path;
        spec.proximity = StaircaseSpec::Proximity::avoid_diagonal;
    } else {
        spec.constrain = StaircaseSpec::Constrain::all_crosses;
        spec.side = StaircaseSpec::Side::left_of_path;
        spec.proximity = StaircaseSpec::Proximity::hug_diagonal;
    }
    return read_staircase(staircase_profile(CrossArray::of(pi), spec), spec);
}

namespace {

// Column profile of a staircase read with the up-on-right rule:
// c_i = number of up-steps before the i-th down-step.
std::vector<int> profile_from_word(const DyckPath& path) {
    std::vector<int> c;
    c.reserve(static_cast<size_t>(path.semilength()));
    int rights = 0;
    for (int k = 0; k < path.length(); ++k) {
        if (path.up(k)) ++rights;
        else c.push_back(rights);
    }
    return c;
}

}  // namespace

Permutation bjs_inverse(const DyckPath& path) {
    const int n = path.semilength();
    const std::vector<int> c = profile_from_word(path);
    std::vector<int> values(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n + 1), false);
    // Rows where the maximal profile was pinched down carry the excedance
    // crosses; everything else fills in increasing order.
    for (int i = 1; i + 1 <= n; ++i) {
        if (c[static_cast<size_t>(i - 1)] < c[static_cast<size_t>(i)]) {
            const int val = c[static_cast<size_t>(i - 1)] + 1;
            values[static_cast<size_t>(i - 1)] = val;
            used[static_cast<size_t>(val)] = true;
        }
    }
    return fill_ascending(std::move(values), std::move(used));
}

Permutation kra_inverse(const DyckPath& path) {
    const int n = path.semilength();
    const std::vector<int> c = profile_from_word(path);
    std::vector<int> values(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n + 1), false);
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        if (c[static_cast<size_t>(i - 1)] > prev) {
            const int val = c[static_cast<size_t>(i - 1)];
            values[static_cast<size_t>(i - 1)] = val;
            used[static_cast<size_t>(val)] = true;
        }
        prev = c[static_cast<size_t>(i - 1)];
    }
    return fill_ascending(std::move(values), std::move(used));
}

Permutation staircase_inverse(const DyckPath& path, StairVariant variant) {
    switch (variant) {
        case StairVariant::bjs: return bjs_inverse(path);
        case StairVariant::kra: return kra_inverse(path);
        case StairVariant::bij4: return inverse(bjs_inverse(path));
    }
    throw std::logic_error("unreachable");
}

DyckPath involution(const DyckPath& path, InvolutionKind kind) {
    return kind == InvolutionKind::va_dr ? rs(bjs_inverse(path)) : rs(kra_inverse(path));
}

Permutation weak_excedance_shift_map(const Permutation& pi) {
    return inverse(bjs_inverse(rs(pi)));
}

}  // namespace catstat
