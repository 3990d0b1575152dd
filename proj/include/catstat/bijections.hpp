#pragma once

#include <vector>

#include "catstat/dyck.hpp"
#include "catstat/permutation.hpp"

namespace catstat {

/// The n x n cross picture of a permutation: a cross in cell (i, pi_i),
/// rows counted 1..n from the top, columns 1..n from the left.  The main
/// diagonal is the set of cells (i, i).
struct CrossArray {
    int n = 0;
    std::vector<std::pair<int, int>> crosses;  // (row, column), one per row

    static CrossArray of(const Permutation& pi);
};

/// Description of a monotone corner-to-corner staircase over a CrossArray.
///
/// The staircase runs from the upper-left to the lower-right corner using
/// right and down moves, and is encoded by its column profile c_1 <= ...
/// <= c_n, where c_i is the number of right moves taken before the i-th
/// down move.  A cross (i, j) lies left of the staircase iff j <= c_i and
/// right of it iff j > c_i.
struct StaircaseSpec {
    enum class Constrain { all_crosses, excedance_crosses };
    enum class Side { left_of_path, right_of_path };
    enum class Proximity { hug_diagonal, avoid_diagonal };
    enum class Reading { up_on_down_move, up_on_right_move };

    Constrain constrain = Constrain::all_crosses;
    Side side = Side::right_of_path;
    Proximity proximity = Proximity::hug_diagonal;
    Reading reading = Reading::up_on_down_move;
};

/// Extremal column profile satisfying the spec; throws std::logic_error
/// if the constraints are infeasible (cannot happen for valid inputs).
std::vector<int> staircase_profile(const CrossArray& array, const StaircaseSpec& spec);

/// Reads a staircase profile off as a Dyck word per the spec's reading rule.
DyckPath read_staircase(const std::vector<int>& profile, const StaircaseSpec& spec);

enum class StairVariant { bjs, kra, bij4 };

// ---- bijections S_n(321) <-> D_n -------------------------------------

/// Appends, for each position i, one up-step and max(a_i - pi_i + 1, 0)
/// down-steps, where a_i is the largest j with {1..j} contained in the
/// first i values.  Sends fixed points to hills, excedances to double
/// rises, descents to uud factors.  Throws std::invalid_argument if pi
/// contains 321.
DyckPath rs(const Permutation& pi);

/// Same path built from the right-to-left minima runs; must agree with rs.
DyckPath rs_via_minima(const Permutation& pi);

/// Same path built as the diagonal-hugging staircase leaving all crosses
/// to the right; cross-validation route for rs.
DyckPath rs_via_staircase(const Permutation& pi);

/// The unique 321-avoiding preimage of a path under rs.
Permutation rs_inverse(const DyckPath& path);

// ---- bijection S_n(132) <-> D_n ---------------------------------------

/// For each value pi_j, as many up-steps as needed followed by one
/// down-step ending at height h_j = #{k > j : pi_k > pi_j}.  Sends fixed
/// points to centered tunnels and excedances to left tunnels.  Throws
/// std::invalid_argument if pi contains 132.
DyckPath krat(const Permutation& pi);

/// Preimage under krat, recovered by placing a cross row by row in the
/// leftmost column right of the staircase that is still free.
Permutation krat_inverse(const DyckPath& path);

// ---- staircase bijections S_n(321) -> D_n ------------------------------

/// bjs:  excedance crosses right of the path, maximal distance from the
///       diagonal; sends excedances to valleys.
/// kra:  all crosses left of the path, minimal distance; sends fixed
///       points to hills and excedances to peaks of height >= 2.
/// bij4: bjs applied to the inverse permutation.
DyckPath staircase_bijection(const Permutation& pi, StairVariant variant);

Permutation bjs_inverse(const DyckPath& path);
Permutation kra_inverse(const DyckPath& path);
Permutation staircase_inverse(const DyckPath& path, StairVariant variant);

// ---- involutions on D_n -------------------------------------------------

enum class InvolutionKind {
    va_dr,  // rs o bjs^-1: swaps valley and double-rise counts
    dr_p2,  // rs o kra^-1: swaps double rises and peaks >= 2, keeps hills
};

DyckPath involution(const DyckPath& path, InvolutionKind kind);

/// pi -> (bjs^-1(rs(pi)))^-1 on S_n(321): an involution taking a
/// permutation with k excedances to one with k+1 weak excedances.
Permutation weak_excedance_shift_map(const Permutation& pi);

}  // namespace catstat
