#pragma once

#include <string>
#include <vector>

namespace catstat {

/// A permutation of {1,..,n} in one-line notation.
///
/// Convention used throughout the library: positions and values are
/// 1-indexed, so at(i) is the value in position i for 1 <= i <= n.
/// The empty permutation (n = 0) is legal and avoids every nonempty
/// pattern.  Instances are immutable after construction.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a rearrangement of 1..n and throws
    /// std::invalid_argument (duplicate / out-of-range / missing value)
    /// otherwise.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    /// Value at 1-indexed position i.
    int at(int i) const { return values_[static_cast<size_t>(i - 1)]; }

    const std::vector<int>& values() const { return values_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// A pattern is just a (usually short) permutation.
using Pattern = Permutation;

struct PermStats {
    int fp = 0;    // fixed points: positions i with pi_i = i
    int exc = 0;   // excedances:   positions i with pi_i > i
    int des = 0;   // descents:     positions i < n with pi_i > pi_{i+1}
    int wexc = 0;  // weak excedances: pi_i >= i; always fp + exc

    bool operator==(const PermStats&) const = default;
};

enum class Transform { inverse, reverse };

/// True iff some subsequence of `pi` is order-isomorphic to `pattern`.
/// Backtracking over candidate positions; requires pattern nonempty.
bool contains(const Permutation& pi, const Pattern& pattern);

inline bool avoids(const Permutation& pi, const Pattern& pattern) {
    return !contains(pi, pattern);
}

/// True iff some occurrence of `pattern` in `prefix` uses the last position.
/// This is the incremental test used when growing permutations value by
/// value, so enumeration can prune a subtree as soon as the newest entry
/// completes an occurrence.
bool occurrence_ends_at_last(const std::vector<int>& prefix, const Pattern& pattern);

PermStats perm_stats(const Permutation& pi);

Permutation inverse(const Permutation& pi);
Permutation reversed(const Permutation& pi);
Permutation transform(const Permutation& pi, Transform kind);

/// Characterization test for 321-avoidance: the values at excedance
/// positions form an increasing subsequence and so do the remaining
/// values.  Kept independent of contains() so the two can cross-check
/// each other.
bool excedance_structure_holds(const Permutation& pi);

/// Serialization: comma-free digit string when n <= 9 ("23147586"),
/// comma-separated otherwise.  parse accepts both forms.
std::string to_string(const Permutation& pi);
Permutation parse_permutation(const std::string& text);

}  // namespace catstat
