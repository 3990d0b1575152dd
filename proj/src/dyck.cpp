#include "catstat/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace catstat {

DyckPath::DyckPath(std::vector<bool> ups) : steps_(std::move(ups)) {
    int height = 0;
    for (bool u : steps_) {
        height += u ? 1 : -1;
        if (height < 0) throw std::invalid_argument("path prefix goes below the axis");
    }
    if (height != 0) throw std::invalid_argument("unbalanced up/down word");
}

DyckPath parse_dyck_word(const std::string& word) {
    std::vector<bool> ups;
    ups.reserve(word.size());
    for (char c : word) {
        if (c == 'u' || c == 'U')
            ups.push_back(true);
        else if (c == 'd' || c == 'D')
            ups.push_back(false);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("bad step character: '") + c + "'");
    }
    return DyckPath(std::move(ups));
}

std::string to_string(const DyckPath& path) {
    std::string word;
    word.reserve(static_cast<size_t>(path.length()));
    for (bool u : path.steps()) word.push_back(u ? 'u' : 'd');
    return word;
}

PathStats path_stats(const DyckPath& path) {
    PathStats s;
    int height = 0;
    const int len = path.length();
    for (int k = 0; k < len; ++k) {
        const bool u = path.up(k);
        if (u && k + 1 < len) {
            if (path.up(k + 1)) ++s.double_rises;
            else {
                ++s.peaks;
                if (height == 0) ++s.hills;
            }
        }
        if (!u && k + 1 < len && path.up(k + 1)) ++s.valleys;
        height += u ? 1 : -1;
    }
    s.peaks_ge2 = s.peaks - s.hills;
    return s;
}

int count_uud(const DyckPath& path) {
    int count = 0;
    for (int k = 0; k + 2 < path.length(); ++k)
        if (path.up(k) && path.up(k + 1) && !path.up(k + 2)) ++count;
    return count;
}

std::vector<Tunnel> tunnels(const DyckPath& path) {
    std::vector<Tunnel> result;
    result.reserve(static_cast<size_t>(path.semilength()));
    std::vector<int> open;  // x-positions of unmatched up-steps
    int height = 0;
    for (int k = 0; k < path.length(); ++k) {
        if (path.up(k)) {
            open.push_back(k);
            ++height;
        } else {
            --height;
            result.push_back(Tunnel{open.back(), k + 1, height});
            open.pop_back();
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Tunnel& a, const Tunnel& b) { return a.start_x < b.start_x; });
    return result;
}

TunnelStats tunnel_stats(const DyckPath& path, int r) {
    TunnelStats s;
    s.r = r;
    const int line = path.semilength() - r;
    for (const Tunnel& t : tunnels(path)) {
        const int mid = t.midpoint();
        if (mid == line) ++s.ct;
        else if (mid < line) ++s.lt;
    }
    return s;
}

DyckPath reflect(const DyckPath& path) {
    std::vector<bool> ups(path.steps().rbegin(), path.steps().rend());
    ups.flip();
    return DyckPath(std::move(ups));
}

}  // namespace catstat
