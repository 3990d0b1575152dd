#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "catstat/dyck.hpp"
#include "catstat/permutation.hpp"
#include "catstat/series.hpp"

namespace catstat {

/// Exhaustive enumeration ceilings: minutes, not hours, on a desktop.
inline constexpr int kMaxPermEnumeration = 10;
inline constexpr int kMaxDyckEnumeration = 14;

enum class PermClass { avoid_321, avoid_132, all_perms };

PermClass perm_class_from_string(const std::string& name);
std::string to_string(PermClass c);

/// Streams each qualifying permutation exactly once, in lexicographic
/// order.  Avoidance classes are generated with subtree pruning: a prefix
/// that already contains the pattern is never extended.
void enumerate(PermClass c, int n, const std::function<void(const Permutation&)>& visit);

/// Same machinery for an arbitrary (usually length-3) pattern.
void enumerate_avoiding(const Pattern& pattern, int n,
                        const std::function<void(const Permutation&)>& visit);

/// All Dyck paths of semilength n, lexicographic with u before d.
void enumerate_dyck(int n, const std::function<void(const DyckPath&)>& visit);

long long catalan_number(int n);
long long factorial(int n);

enum class StatName { fp, exc, des, wexc, h, dr, va, p2, uud, ct, lt };

StatName stat_from_string(const std::string& name);
std::string to_string(StatName s);
bool is_perm_stat(StatName s);

int perm_stat_value(const PermStats& stats, StatName s);
int path_stat_value(const DyckPath& path, StatName s);

/// Joint counts of a statistic tuple over a finite class.
struct DistributionTable {
    std::string klass;
    int n = 0;
    std::vector<StatName> stats;
    std::map<std::vector<int>, long long> entries;

    long long total() const;
    bool operator==(const DistributionTable&) const = default;
};

DistributionTable distribution(PermClass c, int n, const std::vector<StatName>& stats);
DistributionTable dyck_distribution(int n, const std::vector<StatName>& stats);

/// The table as a polynomial in the marking variables (counts become
/// coefficients), exact everywhere.
Series to_series(const DistributionTable& table, const std::vector<Var>& marks);

std::string to_csv(const DistributionTable& table);
std::string to_json(const DistributionTable& table);

// ---- definitional generating-function sums ------------------------------
//
// Each sum is computed term by term from enumerated Dyck paths and
// tunnel_stats, never from a closed form; the two sides of every
// comparison go through disjoint code paths.

/// sum over n <= tmax, 0 <= r <= rmax, D in D_n of x^{ct_r} q^{lt_r} v^r t^n.
Series oracle_g(int tmax, int rmax);

/// Same with the reflected statistics (ct_{-r}, lt_{-r}).
Series oracle_g_reflected(int tmax, int rmax);

/// sum over n <= tmax, r > n of C_n v^r t^n, truncated at v^rmax.
Series oracle_trivial1(int tmax, int rmax);

/// sum over nonempty paths uAd with |uAd| = n <= tmax and offsets
/// k in kband (k >= -n) of x^{ct_{-k}(uAd)} q^{lt_{-k}(uAd)} v^k t^n.
/// The q-exponent uses the left-tunnel statistic throughout.
Series oracle_h1(int tmax, Interval kband);

/// sum over B in D_n, n <= tmax, r in rband with r >= -n.
Series oracle_h2(int tmax, Interval rband);

/// sum over nonempty D in D_n, n <= zmax, r in rband with |r| <= n,
/// in the variables y and z.
Series oracle_h3(int zmax, Interval rband);

}  // namespace catstat
