#include <doctest.h>

#include "catstat/oracle.hpp"
#include "catstat/permutation.hpp"

using namespace catstat;

namespace {
Permutation perm(const std::string& digits) { return parse_permutation(digits); }
}  // namespace

TEST_CASE("construction validates rearrangements of 1..n") {
    CHECK(perm("23147586").size() == 8);
    CHECK(Permutation().size() == 0);
    CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("pattern containment") {
    CHECK(contains(perm("24531"), perm("132")));   // 2,5,3 at positions 1,3,4
    CHECK_FALSE(contains(perm("42351"), perm("132")));
    CHECK(contains(perm("132"), perm("132")));
    CHECK_FALSE(contains(Permutation(), perm("132")));
    CHECK_THROWS_AS(contains(perm("1"), Permutation()), std::invalid_argument);
}

TEST_CASE("statistics of the running examples") {
    const PermStats s = perm_stats(perm("23147586"));
    CHECK(s.fp == 1);
    CHECK(s.exc == 4);
    CHECK(s.des == 3);
    CHECK(s.wexc == 5);

    const PermStats s2 = perm_stats(perm("67435281"));
    CHECK(s2.fp == 1);
    CHECK(s2.exc == 4);

    const PermStats id = perm_stats(Permutation::identity(6));
    CHECK(id.fp == 6);
    CHECK(id.exc == 0);
    CHECK(id.des == 0);
    CHECK(id.wexc == 6);
}

TEST_CASE("transforms") {
    CHECK(transform(perm("231"), Transform::inverse) == perm("312"));
    CHECK(transform(perm("23147586"), Transform::reverse) == perm("68574132"));
    CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
    CHECK(inverse(inverse(perm("35142"))) == perm("35142"));
}

TEST_CASE("excedance structure characterizes 321-avoidance") {
    CHECK(excedance_structure_holds(perm("23147586")));
    CHECK_FALSE(excedance_structure_holds(perm("321")));
    CHECK(excedance_structure_holds(Permutation()));

    const Pattern p321 = perm("321");
    for (int n = 0; n <= 8; ++n) {
        enumerate(PermClass::all_perms, n, [&](const Permutation& pi) {
            CHECK(excedance_structure_holds(pi) == !contains(pi, p321));
        });
    }
}

TEST_CASE("wexc = fp + exc for every permutation up to n = 7") {
    for (int n = 0; n <= 7; ++n) {
        enumerate(PermClass::all_perms, n, [&](const Permutation& pi) {
            const PermStats s = perm_stats(pi);
            CHECK(s.wexc == s.fp + s.exc);
            CHECK(s.exc <= (n == 0 ? 0 : n - 1));
            CHECK(s.des <= (n == 0 ? 0 : n - 1));
        });
    }
}

TEST_CASE("containment is invariant under inverting both sides") {
    std::vector<Pattern> patterns;
    enumerate(PermClass::all_perms, 3, [&](const Permutation& pi) { patterns.push_back(pi); });
    for (int n = 0; n <= 6; ++n) {
        enumerate(PermClass::all_perms, n, [&](const Permutation& pi) {
            for (const Pattern& sigma : patterns)
                CHECK(contains(pi, sigma) == contains(inverse(pi), inverse(sigma)));
        });
    }
}

TEST_CASE("avoidance classes have Catalan size for length-3 patterns") {
    std::vector<Pattern> patterns;
    enumerate(PermClass::all_perms, 3, [&](const Permutation& pi) { patterns.push_back(pi); });
    for (const Pattern& sigma : patterns) {
        for (int n = 0; n <= 7; ++n) {
            long long count = 0;
            enumerate_avoiding(sigma, n, [&](const Permutation&) { ++count; });
            CHECK(count == catalan_number(n));
        }
    }
}

TEST_CASE("serialization round-trips in both forms") {
    CHECK(to_string(perm("23147586")) == "23147586");
    const Permutation big = Permutation::identity(11);
    CHECK(to_string(big) == "1,2,3,4,5,6,7,8,9,10,11");
    CHECK(parse_permutation(to_string(big)) == big);
    CHECK(parse_permutation("10,2,3,4,5,6,7,8,9,1,11") ==
          Permutation(std::vector<int>{10, 2, 3, 4, 5, 6, 7, 8, 9, 1, 11}));
    CHECK_THROWS_AS(parse_permutation("1,a,3"), std::invalid_argument);
    CHECK(parse_permutation("") == Permutation());
}
