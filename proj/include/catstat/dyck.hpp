#pragma once

#include <string>
#include <vector>

namespace catstat {

/// A Dyck path: a balanced sequence of up/down steps whose every prefix
/// has at least as many ups as downs.
///
/// Geometry convention (fixed here, used by all tunnel arithmetic):
/// the path starts at x = 0 and step k occupies [k-1, k] on the x-axis,
/// so lattice points have integer x-coordinates 0..2n.
class DyckPath {
public:
    DyckPath() = default;

    /// Validates balance and nonnegative prefix heights; throws
    /// std::invalid_argument otherwise.  Input is a sequence of booleans,
    /// true = up-step.
    explicit DyckPath(std::vector<bool> ups);

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    int length() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }

    /// true = up-step, false = down-step; 0-indexed.
    bool up(int k) const { return steps_[static_cast<size_t>(k)]; }
    const std::vector<bool>& steps() const { return steps_; }

    bool operator==(const DyckPath&) const = default;
    auto operator<=>(const DyckPath&) const = default;

private:
    std::vector<bool> steps_;
};

/// A matched up/down step pair together with the horizontal segment
/// joining the start of the up-step to the end of the down-step.
struct Tunnel {
    int start_x = 0;  // x where the up-step begins
    int end_x = 0;    // x where the matched down-step ends
    int height = 0;   // y of the horizontal segment

    /// end_x - start_x is always even, so the midpoint is an integer.
    int midpoint() const { return (start_x + end_x) / 2; }
    bool operator==(const Tunnel&) const = default;
};

struct PathStats {
    int hills = 0;         // peaks at height 1
    int double_rises = 0;  // uu factors
    int valleys = 0;       // du factors
    int peaks = 0;         // ud factors
    int peaks_ge2 = 0;     // peaks at height >= 2

    bool operator==(const PathStats&) const = default;
};

struct TunnelStats {
    int r = 0;   // offset of the reference line x = n - r
    int ct = 0;  // tunnels with midpoint exactly on the reference line
    int lt = 0;  // tunnels with midpoint strictly left of it

    bool operator==(const TunnelStats&) const = default;
};

/// Parses a word over u/d (case-insensitive); throws on other characters,
/// unbalanced words, or prefixes dipping below the axis.
DyckPath parse_dyck_word(const std::string& word);

inline DyckPath make_path(const std::string& word) { return parse_dyck_word(word); }

/// Canonical lowercase "ud..." form.
std::string to_string(const DyckPath& path);

PathStats path_stats(const DyckPath& path);

/// Number of uud factors in the word.
int count_uud(const DyckPath& path);

/// All n tunnels, one per up-step, computed by a stack scan (push on up,
/// pop on down); ordered by start_x.
std::vector<Tunnel> tunnels(const DyckPath& path);

/// Tunnel counts relative to the reference line x = n - r.
TunnelStats tunnel_stats(const DyckPath& path, int r);

/// Reflection onto the vertical line x = n: word reversed with up/down
/// swapped.  An involution.
DyckPath reflect(const DyckPath& path);

}  // namespace catstat
