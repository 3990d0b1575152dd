#include "catstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace catstat {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : values_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value out of range 1..n: " + std::to_string(v));
        if (seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("duplicate permutation value: " + std::to_string(v));
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

namespace {

// Extends a partial embedding of pattern into values by backtracking.
// chosen holds the values picked so far for pattern positions 0..j-1.
bool embed_from(const std::vector<int>& values, const std::vector<int>& pattern,
                size_t j, size_t from, std::vector<int>& chosen) {
    if (j == pattern.size()) return true;
    const size_t remaining = pattern.size() - j;
    for (size_t pos = from; pos + remaining <= values.size(); ++pos) {
        const int cand = values[pos];
        bool ok = true;
        for (size_t l = 0; l < j && ok; ++l) {
            if ((cand < chosen[l]) != (pattern[j] < pattern[l])) ok = false;
        }
        if (!ok) continue;
        chosen.push_back(cand);
        if (embed_from(values, pattern, j + 1, pos + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains(const Permutation& pi, const Pattern& pattern) {
    if (pattern.empty())
        throw std::invalid_argument("pattern must be nonempty");
    if (pattern.size() > pi.size()) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(pattern.size()));
    return embed_from(pi.values(), pattern.values(), 0, 0, chosen);
}

bool occurrence_ends_at_last(const std::vector<int>& prefix, const Pattern& pattern) {
    const size_t m = static_cast<size_t>(pattern.size());
    if (m == 0 || prefix.size() < m) return false;
    // Fix the last pattern letter on the last prefix entry, embed the rest.
    const int last = prefix.back();
    const auto& pat = pattern.values();
    std::vector<int> head(prefix.begin(), prefix.end() - 1);
    // chosen values for pat[0..m-2] must each compare to `last` as pat
    // letters compare to pat[m-1]; reuse the generic embedder on a
    // shortened pattern while filtering against the fixed last value.
    std::vector<size_t> stack;
    std::vector<int> chosen;
    size_t j = 0, from = 0;
    while (true) {
        if (j == m - 1) return true;
        bool advanced = false;
        const size_t remaining = (m - 1) - j;
        for (size_t pos = from; pos + remaining <= head.size(); ++pos) {
            const int cand = head[pos];
            if ((cand < last) != (pat[j] < pat[m - 1])) continue;
            bool ok = true;
            for (size_t l = 0; l < j && ok; ++l)
                if ((cand < chosen[l]) != (pat[j] < pat[l])) ok = false;
            if (!ok) continue;
            stack.push_back(pos);
            chosen.push_back(cand);
            ++j;
            from = pos + 1;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (j == 0) return false;
        --j;
        from = stack.back() + 1;
        stack.pop_back();
        chosen.pop_back();
    }
}

PermStats perm_stats(const Permutation& pi) {
    PermStats s;
    const int n = pi.size();
    for (int i = 1; i <= n; ++i) {
        const int v = pi.at(i);
        if (v == i) ++s.fp;
        if (v > i) ++s.exc;
        if (i < n && v > pi.at(i + 1)) ++s.des;
    }
    s.wexc = s.fp + s.exc;
    return s;
}

Permutation inverse(const Permutation& pi) {
    std::vector<int> inv(static_cast<size_t>(pi.size()));
    for (int i = 1; i <= pi.size(); ++i) inv[static_cast<size_t>(pi.at(i) - 1)] = i;
    return Permutation(std::move(inv));
}

Permutation reversed(const Permutation& pi) {
    std::vector<int> rev(pi.values().rbegin(), pi.values().rend());
    return Permutation(std::move(rev));
}

Permutation transform(const Permutation& pi, Transform kind) {
    return kind == Transform::inverse ? inverse(pi) : reversed(pi);
}

bool excedance_structure_holds(const Permutation& pi) {
    int last_exc = 0, last_rest = 0;
    for (int i = 1; i <= pi.size(); ++i) {
        const int v = pi.at(i);
        int& last = (v > i) ? last_exc : last_rest;
        if (v <= last) return false;
        last = v;
    }
    return true;
}

std::string to_string(const Permutation& pi) {
    std::ostringstream out;
    const bool compact = pi.size() <= 9;
    for (int i = 1; i <= pi.size(); ++i) {
        if (!compact && i > 1) out << ',';
        out << pi.at(i);
    }
    return out.str();
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad permutation entry: '" + item + "'");
            }
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size())
                throw std::invalid_argument("bad permutation entry: '" + item + "'");
            vals.push_back(v);
        }
    } else {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("bad permutation digit: '") + c + "'");
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

}  // namespace catstat
