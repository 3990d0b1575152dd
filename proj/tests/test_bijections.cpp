#include <doctest.h>

#include <set>

#include "catstat/bijections.hpp"
#include "catstat/oracle.hpp"

using namespace catstat;

namespace {
Permutation perm(const std::string& digits) { return parse_permutation(digits); }
}  // namespace

TEST_CASE("rs on the running example and the degenerate cases") {
    CHECK(to_string(rs(perm("23147586"))) == "uuuddduduuduuddd");
    CHECK(to_string(rs(Permutation::identity(4))) == "udududud");
    CHECK(to_string(rs(perm("1"))) == "ud");
    CHECK(rs(Permutation()).empty());
    CHECK_THROWS_AS(rs(perm("321")), std::invalid_argument);
}

TEST_CASE("rs via right-to-left minima") {
    CHECK(rs_via_minima(perm("23147586")) == rs(perm("23147586")));
    CHECK(to_string(rs_via_minima(Permutation::identity(5))) == "ududududud");
    CHECK(to_string(rs_via_minima(perm("312"))) == "uududd");
    CHECK(to_string(rs_via_minima(perm("231"))) == "uuuddd");
    for (int n = 0; n <= 9; ++n)
        enumerate(PermClass::avoid_321, n, [&](const Permutation& pi) {
            CHECK(rs_via_minima(pi) == rs(pi));
            CHECK(rs_via_staircase(pi) == rs(pi));
        });
}

TEST_CASE("rs inverse") {
    CHECK(rs_inverse(make_path("udud")) == Permutation::identity(2));
    CHECK(rs_inverse(make_path("uuuddduduuduuddd")) == perm("23147586"));
    for (int n = 0; n <= 7; ++n)
        enumerate(PermClass::avoid_321, n,
                  [&](const Permutation& pi) { CHECK(rs_inverse(rs(pi)) == pi); });
}

TEST_CASE("krat on the running example and the small cases") {
    // the exact word, spelled out step by step
    CHECK(krat(perm("67435281")) ==
          DyckPath(std::vector<bool>{true, true, true, false, false, true, true, false, true,
                                     false, false, true, false, false, true, false}));
    CHECK(to_string(krat(perm("12"))) == "uudd");
    CHECK(to_string(krat(perm("21"))) == "udud");
    CHECK(to_string(krat(perm("1"))) == "ud");
    CHECK_THROWS_AS(krat(perm("132")), std::invalid_argument);
}

TEST_CASE("krat inverse") {
    CHECK(krat_inverse(make_path("udud")) == perm("21"));
    CHECK(krat_inverse(make_path("uudd")) == perm("12"));
    for (int n = 0; n <= 7; ++n)
        enumerate(PermClass::avoid_132, n,
                  [&](const Permutation& pi) { CHECK(krat_inverse(krat(pi)) == pi); });
}

TEST_CASE("bjs maps the identity to the single-peak path") {
    CHECK(to_string(staircase_bijection(Permutation::identity(2), StairVariant::bjs)) == "uudd");
    CHECK(to_string(staircase_bijection(Permutation::identity(4), StairVariant::bjs)) ==
          "uuuudddd");
    CHECK_THROWS_AS(staircase_bijection(perm("321"), StairVariant::bjs), std::invalid_argument);
}

TEST_CASE("kra equals rs composed with inversion") {
    for (int n = 0; n <= 8; ++n)
        enumerate(PermClass::avoid_321, n, [&](const Permutation& pi) {
            CHECK(staircase_bijection(pi, StairVariant::kra) == rs(inverse(pi)));
            CHECK(staircase_bijection(pi, StairVariant::bij4) ==
                  staircase_bijection(inverse(pi), StairVariant::bjs));
        });
}

TEST_CASE("staircase inverses round-trip") {
    for (int n = 0; n <= 7; ++n)
        enumerate(PermClass::avoid_321, n, [&](const Permutation& pi) {
            for (StairVariant v : {StairVariant::bjs, StairVariant::kra, StairVariant::bij4})
                CHECK(staircase_inverse(staircase_bijection(pi, v), v) == pi);
        });
}

TEST_CASE("all five bijections are injective onto the path set") {
    for (int n = 0; n <= 7; ++n) {
        std::set<DyckPath> rs_im, krat_im, bjs_im, kra_im, bij4_im;
        enumerate(PermClass::avoid_321, n, [&](const Permutation& pi) {
            rs_im.insert(rs(pi));
            bjs_im.insert(staircase_bijection(pi, StairVariant::bjs));
            kra_im.insert(staircase_bijection(pi, StairVariant::kra));
            bij4_im.insert(staircase_bijection(pi, StairVariant::bij4));
        });
        enumerate(PermClass::avoid_132, n,
                  [&](const Permutation& pi) { krat_im.insert(krat(pi)); });
        const long long cn = catalan_number(n);
        CHECK(static_cast<long long>(rs_im.size()) == cn);
        CHECK(static_cast<long long>(krat_im.size()) == cn);
        CHECK(static_cast<long long>(bjs_im.size()) == cn);
        CHECK(static_cast<long long>(kra_im.size()) == cn);
        CHECK(static_cast<long long>(bij4_im.size()) == cn);
    }
}

TEST_CASE("statistic transport, exhaustive for small n") {
    for (int n = 0; n <= 7; ++n) {
        enumerate(PermClass::avoid_321, n, [&](const Permutation& pi) {
            const PermStats ps = perm_stats(pi);
            const PathStats rs_stats = path_stats(rs(pi));
            CHECK(ps.fp == rs_stats.hills);
            CHECK(ps.exc == rs_stats.double_rises);
            CHECK(ps.des == count_uud(rs(pi)));
            CHECK(ps.exc == path_stats(staircase_bijection(pi, StairVariant::bjs)).valleys);
            const PathStats kra_stats = path_stats(staircase_bijection(pi, StairVariant::kra));
            CHECK(ps.fp == kra_stats.hills);
            CHECK(ps.exc == kra_stats.peaks_ge2);
        });
        enumerate(PermClass::avoid_132, n, [&](const Permutation& pi) {
            const PermStats ps = perm_stats(pi);
            const TunnelStats ts = tunnel_stats(krat(pi), 0);
            CHECK(ps.fp == ts.ct);
            CHECK(ps.exc == ts.lt);
        });
    }
}

TEST_CASE("involutions swap their statistics") {
    for (int n = 0; n <= 8; ++n) {
        enumerate_dyck(n, [&](const DyckPath& d) {
            const PathStats s = path_stats(d);
            const DyckPath e1 = involution(d, InvolutionKind::va_dr);
            CHECK(involution(e1, InvolutionKind::va_dr) == d);
            CHECK(path_stats(e1).valleys == s.double_rises);
            CHECK(path_stats(e1).double_rises == s.valleys);
            const DyckPath e2 = involution(d, InvolutionKind::dr_p2);
            CHECK(involution(e2, InvolutionKind::dr_p2) == d);
            CHECK(path_stats(e2).double_rises == s.peaks_ge2);
            CHECK(path_stats(e2).peaks_ge2 == s.double_rises);
            CHECK(path_stats(e2).hills == s.hills);
        });
    }
}

TEST_CASE("weak excedance shift witness") {
    for (int n = 1; n <= 7; ++n)
        enumerate(PermClass::avoid_321, n, [&](const Permutation& pi) {
            const Permutation sigma = weak_excedance_shift_map(pi);
            CHECK(perm_stats(sigma).wexc == perm_stats(pi).exc + 1);
            CHECK(excedance_structure_holds(sigma));
        });
}

TEST_CASE("staircase profiles respect their constraints") {
    // leaving all crosses right of the path and hugging the diagonal
    StaircaseSpec spec;
    spec.constrain = StaircaseSpec::Constrain::all_crosses;
    spec.side = StaircaseSpec::Side::right_of_path;
    spec.proximity = StaircaseSpec::Proximity::hug_diagonal;
    const auto profile = staircase_profile(CrossArray::of(perm("23147586")), spec);
    CHECK(profile == std::vector<int>{0, 0, 0, 3, 4, 4, 5, 5});
}
