#include <doctest.h>

#include "catstat/bijections.hpp"
#include "catstat/dyck.hpp"
#include "catstat/oracle.hpp"

using namespace catstat;

TEST_CASE("word validation") {
    CHECK(make_path("uudd").semilength() == 2);
    CHECK_THROWS_AS(make_path("uddu"), std::invalid_argument);
    CHECK_THROWS_AS(make_path("uud"), std::invalid_argument);
    CHECK_THROWS_AS(make_path("uxdd"), std::invalid_argument);
    CHECK(make_path("uuudddudUUdUUddd").semilength() == 8);  // case-insensitive
    CHECK(make_path("").empty());
}

TEST_CASE("path statistics") {
    // sawtooth
    CHECK(path_stats(make_path("udududud")) ==
          PathStats{4, 0, 3, 4, 0});
    // pyramid
    CHECK(path_stats(make_path("uuuudddd")) == PathStats{0, 3, 0, 1, 1});
    const DyckPath d = make_path("uuuddduduuduuddd");
    const PathStats s = path_stats(d);
    CHECK(s.hills == 1);
    CHECK(s.double_rises == 4);
    CHECK(count_uud(d) == 3);
}

TEST_CASE("peaks = valleys + 1 = hills + peaks_ge2 on nonempty paths") {
    for (int n = 1; n <= 8; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            const PathStats s = path_stats(d);
            CHECK(s.peaks == s.valleys + 1);
            CHECK(s.peaks == s.hills + s.peaks_ge2);
        });
    }
}

TEST_CASE("tunnels of the small paths") {
    CHECK(tunnels(make_path("ud")) == std::vector<Tunnel>{{0, 2, 0}});
    CHECK(tunnels(make_path("uudd")) == std::vector<Tunnel>{{0, 4, 0}, {1, 3, 1}});
    CHECK(tunnels(make_path("udud")) == std::vector<Tunnel>{{0, 2, 0}, {2, 4, 0}});
}

TEST_CASE("tunnel statistics at the centered reference line") {
    const TunnelStats a = tunnel_stats(make_path("uudd"), 0);
    CHECK(a.ct == 2);
    CHECK(a.lt == 0);
    const TunnelStats b = tunnel_stats(make_path("udud"), 0);
    CHECK(b.ct == 0);
    CHECK(b.lt == 1);
    const TunnelStats c = tunnel_stats(krat(parse_permutation("67435281")), 0);
    CHECK(c.ct == 1);
    CHECK(c.lt == 4);
}

TEST_CASE("every path has n tunnels and their midpoints account for all offsets") {
    for (int n = 0; n <= 10; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            CHECK(static_cast<int>(tunnels(d).size()) == n);
            int total_ct = 0;
            for (int r = -n; r <= n; ++r) {
                const TunnelStats s = tunnel_stats(d, r);
                CHECK(s.ct + s.lt <= n);
                total_ct += s.ct;
            }
            CHECK(total_ct == n);
        });
    }
}

TEST_CASE("reflection") {
    CHECK(reflect(make_path("uudd")) == make_path("uudd"));
    CHECK(reflect(make_path("uuddud")) == make_path("uduudd"));
    for (int n = 0; n <= 6; ++n)
        enumerate_dyck(n, [&](const DyckPath& d) { CHECK(reflect(reflect(d)) == d); });
}

TEST_CASE("reflection swaps the shifted statistics") {
    for (int n = 0; n <= 10; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            const DyckPath r = reflect(d);
            for (int off = -n; off <= n; ++off) {
                const TunnelStats neg = tunnel_stats(d, -off);
                const TunnelStats pos = tunnel_stats(r, off);
                CHECK(neg.ct == pos.ct);
                CHECK(neg.lt == n - pos.lt - pos.ct);
            }
        });
    }
}

TEST_CASE("far reference lines see nothing / everything") {
    for (int n = 0; n <= 6; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            for (int r = n; r <= n + 2; ++r) {
                CHECK(tunnel_stats(d, r).ct == 0);
                CHECK(tunnel_stats(d, r).lt == 0);
                CHECK(tunnel_stats(d, -r).ct == 0);
                CHECK(tunnel_stats(d, -r).lt == n);
            }
        });
    }
}
