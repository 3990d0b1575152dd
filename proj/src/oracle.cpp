#include "catstat/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace catstat {

namespace {

void check_perm_ceiling(int n) {
    if (n < 0 || n > kMaxPermEnumeration)
        throw std::invalid_argument("permutation enumeration limited to 0 <= n <= " +
                                    std::to_string(kMaxPermEnumeration));
}

void check_dyck_ceiling(int n) {
    if (n < 0 || n > kMaxDyckEnumeration)
        throw std::invalid_argument("Dyck enumeration limited to 0 <= n <= " +
                                    std::to_string(kMaxDyckEnumeration));
}

void enumerate_perms(int n, const Pattern* avoid,
                     const std::function<void(const Permutation&)>& visit) {
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n + 1), false);
    const std::function<void()> rec = [&] {
        if (static_cast<int>(prefix.size()) == n) {
            visit(Permutation(prefix));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            prefix.push_back(v);
            used[static_cast<size_t>(v)] = true;
            if (!avoid || !occurrence_ends_at_last(prefix, *avoid)) rec();
            used[static_cast<size_t>(v)] = false;
            prefix.pop_back();
        }
    };
    rec();
}

}  // namespace

PermClass perm_class_from_string(const std::string& name) {
    if (name == "321" || name == "avoid_321") return PermClass::avoid_321;
    if (name == "132" || name == "avoid_132") return PermClass::avoid_132;
    if (name == "all" || name == "all_perms") return PermClass::all_perms;
    throw std::invalid_argument("unknown permutation class: " + name);
}

std::string to_string(PermClass c) {
    switch (c) {
        case PermClass::avoid_321: return "avoid_321";
        case PermClass::avoid_132: return "avoid_132";
        case PermClass::all_perms: return "all_perms";
    }
    throw std::logic_error("unreachable");
}

void enumerate(PermClass c, int n, const std::function<void(const Permutation&)>& visit) {
    check_perm_ceiling(n);
    static const Pattern p321(std::vector<int>{3, 2, 1});
    static const Pattern p132(std::vector<int>{1, 3, 2});
    switch (c) {
        case PermClass::avoid_321: enumerate_perms(n, &p321, visit); return;
        case PermClass::avoid_132: enumerate_perms(n, &p132, visit); return;
        case PermClass::all_perms: enumerate_perms(n, nullptr, visit); return;
    }
}

void enumerate_avoiding(const Pattern& pattern, int n,
                        const std::function<void(const Permutation&)>& visit) {
    check_perm_ceiling(n);
    enumerate_perms(n, &pattern, visit);
}

void enumerate_dyck(int n, const std::function<void(const DyckPath&)>& visit) {
    check_dyck_ceiling(n);
    std::vector<bool> steps;
    steps.reserve(static_cast<size_t>(2 * n));
    const std::function<void(int, int)> rec = [&](int ups, int downs) {
        if (ups + downs == 2 * n) {
            visit(DyckPath(steps));
            return;
        }
        if (ups < n) {
            steps.push_back(true);
            rec(ups + 1, downs);
            steps.pop_back();
        }
        if (downs < ups) {
            steps.push_back(false);
            rec(ups, downs + 1);
            steps.pop_back();
        }
    };
    rec(0, 0);
}

long long catalan_number(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

StatName stat_from_string(const std::string& name) {
    if (name == "fp") return StatName::fp;
    if (name == "exc") return StatName::exc;
    if (name == "des") return StatName::des;
    if (name == "wexc") return StatName::wexc;
    if (name == "h") return StatName::h;
    if (name == "dr") return StatName::dr;
    if (name == "va") return StatName::va;
    if (name == "p2") return StatName::p2;
    if (name == "uud") return StatName::uud;
    if (name == "ct") return StatName::ct;
    if (name == "lt") return StatName::lt;
    throw std::invalid_argument("unknown statistic: " + name);
}

std::string to_string(StatName s) {
    switch (s) {
        case StatName::fp: return "fp";
        case StatName::exc: return "exc";
        case StatName::des: return "des";
        case StatName::wexc: return "wexc";
        case StatName::h: return "h";
        case StatName::dr: return "dr";
        case StatName::va: return "va";
        case StatName::p2: return "p2";
        case StatName::uud: return "uud";
        case StatName::ct: return "ct";
        case StatName::lt: return "lt";
    }
    throw std::logic_error("unreachable");
}

bool is_perm_stat(StatName s) {
    return s == StatName::fp || s == StatName::exc || s == StatName::des || s == StatName::wexc;
}

int perm_stat_value(const PermStats& stats, StatName s) {
    switch (s) {
        case StatName::fp: return stats.fp;
        case StatName::exc: return stats.exc;
        case StatName::des: return stats.des;
        case StatName::wexc: return stats.wexc;
        default: throw std::invalid_argument("not a permutation statistic: " + to_string(s));
    }
}

int path_stat_value(const DyckPath& path, StatName s) {
    switch (s) {
        case StatName::h: return path_stats(path).hills;
        case StatName::dr: return path_stats(path).double_rises;
        case StatName::va: return path_stats(path).valleys;
        case StatName::p2: return path_stats(path).peaks_ge2;
        case StatName::uud: return count_uud(path);
        case StatName::ct: return tunnel_stats(path, 0).ct;
        case StatName::lt: return tunnel_stats(path, 0).lt;
        default: throw std::invalid_argument("not a path statistic: " + to_string(s));
    }
}

long long DistributionTable::total() const {
    long long sum = 0;
    for (const auto& [k, v] : entries) sum += v;
    return sum;
}

DistributionTable distribution(PermClass c, int n, const std::vector<StatName>& stats) {
    for (StatName s : stats)
        if (!is_perm_stat(s))
            throw std::invalid_argument("path statistic " + to_string(s) +
                                        " not defined on a permutation class");
    DistributionTable table;
    table.klass = to_string(c);
    table.n = n;
    table.stats = stats;
    enumerate(c, n, [&](const Permutation& pi) {
        const PermStats ps = perm_stats(pi);
        std::vector<int> key;
        key.reserve(stats.size());
        for (StatName s : stats) key.push_back(perm_stat_value(ps, s));
        ++table.entries[key];
    });
    const long long expected =
        c == PermClass::all_perms ? factorial(n) : catalan_number(n);
    if (table.total() != expected)
        throw std::logic_error("distribution counts do not sum to the class cardinality");
    return table;
}

DistributionTable dyck_distribution(int n, const std::vector<StatName>& stats) {
    DistributionTable table;
    table.klass = "dyck";
    table.n = n;
    table.stats = stats;
    enumerate_dyck(n, [&](const DyckPath& d) {
        std::vector<int> key;
        key.reserve(stats.size());
        for (StatName s : stats) key.push_back(path_stat_value(d, s));
        ++table.entries[key];
    });
    if (table.total() != catalan_number(n))
        throw std::logic_error("distribution counts do not sum to the class cardinality");
    return table;
}

Series to_series(const DistributionTable& table, const std::vector<Var>& marks) {
    if (marks.size() != table.stats.size())
        throw std::invalid_argument("need one marking variable per statistic");
    std::vector<std::pair<Monomial, Rat>> terms;
    terms.reserve(table.entries.size());
    for (const auto& [key, count] : table.entries) {
        Monomial m;
        for (size_t i = 0; i < marks.size(); ++i) m[marks[i]] += key[i];
        terms.emplace_back(m, Rat(count));
    }
    return Series::polynomial(terms);
}

std::string to_csv(const DistributionTable& table) {
    std::ostringstream out;
    for (size_t i = 0; i < table.stats.size(); ++i) out << to_string(table.stats[i]) << ',';
    out << "count\n";
    for (const auto& [key, count] : table.entries) {
        for (int v : key) out << v << ',';
        out << count << '\n';
    }
    return out.str();
}

std::string to_json(const DistributionTable& table) {
    nlohmann::json j;
    j["class"] = table.klass;
    j["n"] = table.n;
    for (StatName s : table.stats) j["stats"].push_back(to_string(s));
    j["rows"] = nlohmann::json::array();
    for (const auto& [key, count] : table.entries) {
        nlohmann::json row;
        row["values"] = key;
        row["count"] = count;
        j["rows"].push_back(row);
    }
    j["total"] = table.total();
    return j.dump(2);
}

namespace {

Series oracle_series(Series::Terms terms, Window window) {
    // The oracle sums are their own ground truth on their window; the
    // support certificate is just the bounding box of what was summed.
    Series poly = Series::polynomial({terms.begin(), terms.end()});
    return Series(std::move(terms), window, poly.support());
}

}  // namespace

Series oracle_g(int tmax, int rmax) {
    Series::Terms terms;
    for (int n = 0; n <= tmax; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            for (int r = 0; r <= rmax; ++r) {
                const TunnelStats ts = tunnel_stats(d, r);
                terms[mono({{Var::x, ts.ct}, {Var::q, ts.lt}, {Var::v, r}, {Var::t, n}})] += 1;
            }
        });
    }
    Window w = Window::order(tmax);
    w[Var::v] = {-kExpInf, rmax};
    return oracle_series(std::move(terms), w);
}

Series oracle_g_reflected(int tmax, int rmax) {
    Series::Terms terms;
    for (int n = 0; n <= tmax; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            for (int r = 0; r <= rmax; ++r) {
                const TunnelStats ts = tunnel_stats(d, -r);
                terms[mono({{Var::x, ts.ct}, {Var::q, ts.lt}, {Var::v, r}, {Var::t, n}})] += 1;
            }
        });
    }
    Window w = Window::order(tmax);
    w[Var::v] = {-kExpInf, rmax};
    return oracle_series(std::move(terms), w);
}

Series oracle_trivial1(int tmax, int rmax) {
    Series::Terms terms;
    for (int n = 0; n <= tmax; ++n)
        for (int r = n + 1; r <= rmax; ++r)
            terms[mono({{Var::v, r}, {Var::t, n}})] = Rat(catalan_number(n));
    Window w = Window::order(tmax);
    w[Var::v] = {-kExpInf, rmax};
    return oracle_series(std::move(terms), w);
}

Series oracle_h1(int tmax, Interval kband) {
    Series::Terms terms;
    for (int n = 1; n <= tmax; ++n) {
        enumerate_dyck(n - 1, [&](const DyckPath& inner) {
            std::vector<bool> steps;
            steps.reserve(static_cast<size_t>(2 * n));
            steps.push_back(true);
            steps.insert(steps.end(), inner.steps().begin(), inner.steps().end());
            steps.push_back(false);
            const DyckPath d(std::move(steps));
            for (int k = std::max(-n, kband.lo); k <= kband.hi; ++k) {
                const TunnelStats ts = tunnel_stats(d, -k);
                terms[mono({{Var::x, ts.ct}, {Var::q, ts.lt}, {Var::v, k}, {Var::t, n}})] += 1;
            }
        });
    }
    Window w = Window::order(tmax);
    w[Var::v] = kband;
    return oracle_series(std::move(terms), w);
}

Series oracle_h2(int tmax, Interval rband) {
    Series::Terms terms;
    for (int n = 0; n <= tmax; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            for (int r = std::max(-n, rband.lo); r <= rband.hi; ++r) {
                const TunnelStats ts = tunnel_stats(d, r);
                terms[mono({{Var::x, ts.ct}, {Var::q, ts.lt}, {Var::v, r}, {Var::t, n}})] += 1;
            }
        });
    }
    Window w = Window::order(tmax);
    w[Var::v] = rband;
    return oracle_series(std::move(terms), w);
}

Series oracle_h3(int zmax, Interval rband) {
    Series::Terms terms;
    for (int n = 1; n <= zmax; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            for (int r = std::max(-n, rband.lo); r <= std::min(n, rband.hi); ++r) {
                const TunnelStats ts = tunnel_stats(d, r);
                terms[mono({{Var::x, ts.ct}, {Var::q, ts.lt}, {Var::y, r}, {Var::z, n}})] += 1;
            }
        });
    }
    Window w = Window::zorder(zmax);
    w[Var::y] = rband;
    return oracle_series(std::move(terms), w);
}

}  // namespace catstat
