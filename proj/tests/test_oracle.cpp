#include <doctest.h>

#include <set>

#include "catstat/oracle.hpp"

using namespace catstat;

TEST_CASE("enumerate small classes") {
    std::set<std::string> got;
    enumerate(PermClass::avoid_132, 3, [&](const Permutation& pi) { got.insert(to_string(pi)); });
    CHECK(got == std::set<std::string>{"123", "213", "231", "312", "321"});

    got.clear();
    enumerate(PermClass::avoid_321, 3, [&](const Permutation& pi) { got.insert(to_string(pi)); });
    CHECK(got == std::set<std::string>{"123", "132", "213", "231", "312"});

    int count = 0;
    enumerate(PermClass::all_perms, 0, [&](const Permutation& pi) {
        CHECK(pi.empty());
        ++count;
    });
    CHECK(count == 1);

    CHECK_THROWS_AS(enumerate(PermClass::all_perms, kMaxPermEnumeration + 1,
                              [](const Permutation&) {}),
                    std::invalid_argument);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    std::vector<std::string> first, second;
    enumerate(PermClass::avoid_321, 6, [&](const Permutation& pi) { first.push_back(to_string(pi)); });
    enumerate(PermClass::avoid_321, 6, [&](const Permutation& pi) { second.push_back(to_string(pi)); });
    CHECK(first == second);
    CHECK(std::set<std::string>(first.begin(), first.end()).size() == first.size());
    CHECK(static_cast<long long>(first.size()) == catalan_number(6));
}

TEST_CASE("dyck enumeration") {
    for (int n = 0; n <= 9; ++n) {
        long long count = 0;
        enumerate_dyck(n, [&](const DyckPath& d) {
            CHECK(d.semilength() == n);
            ++count;
        });
        CHECK(count == catalan_number(n));
    }
}

TEST_CASE("distribution tables") {
    const DistributionTable t321 = distribution(PermClass::avoid_321, 3, {StatName::fp, StatName::exc});
    const DistributionTable t132 = distribution(PermClass::avoid_132, 3, {StatName::fp, StatName::exc});
    const std::map<std::vector<int>, long long> expected = {
        {{3, 0}, 1}, {{1, 1}, 2}, {{0, 1}, 1}, {{0, 2}, 1}};
    CHECK(t321.entries == expected);
    CHECK(t132.entries == expected);

    const DistributionTable fp132 = distribution(PermClass::avoid_132, 3, {StatName::fp});
    CHECK(fp132.entries == std::map<std::vector<int>, long long>{{{3}, 1}, {{1}, 2}, {{0}, 2}});

    CHECK_THROWS_AS(distribution(PermClass::avoid_321, 3, {StatName::h}), std::invalid_argument);
}

TEST_CASE("distribution converts to a polynomial") {
    const DistributionTable t = distribution(PermClass::avoid_321, 3, {StatName::fp, StatName::exc});
    const Series s = to_series(t, {Var::x, Var::q});
    CHECK(s.coefficient(mono({{Var::x, 3}})) == 1);
    CHECK(s.coefficient(mono({{Var::x, 1}, {Var::q, 1}})) == 2);
    CHECK(s.coefficient(mono({{Var::q, 1}})) == 1);
    CHECK(s.coefficient(mono({{Var::q, 2}})) == 1);
}

TEST_CASE("CSV and JSON exports") {
    const DistributionTable t = distribution(PermClass::avoid_132, 3, {StatName::fp, StatName::exc});
    CHECK(to_csv(t) == "fp,exc,count\n0,1,1\n0,2,1\n1,1,2\n3,0,1\n");
    const std::string j = to_json(t);
    CHECK(j.find("\"total\": 5") != std::string::npos);
}

TEST_CASE("the v^0 slice of the definitional G is the (ct,lt) distribution") {
    const Series g = oracle_g(4, 4);
    for (int n = 0; n <= 4; ++n) {
        const DistributionTable d = dyck_distribution(n, {StatName::ct, StatName::lt});
        for (const auto& [key, count] : d.entries) {
            CHECK(g.coefficient(mono({{Var::x, key[0]}, {Var::q, key[1]}, {Var::t, n}})) ==
                  count);
        }
    }
}

TEST_CASE("far-offset slices of the definitional G are plain path counts") {
    const Series g = oracle_g(4, 7);
    for (int n = 0; n <= 4; ++n)
        for (int r = n; r <= 7; ++r)
            CHECK(g.coefficient(mono({{Var::v, r}, {Var::t, n}})) == catalan_number(n));
}

TEST_CASE("the definitional H3 has no constant term") {
    const Series h3 = oracle_h3(3, {-3, 3});
    CHECK(h3.coefficient(Monomial{}) == 0);
}

TEST_CASE("mutual oracle: the two 321 filters agree") {
    const Pattern p321(std::vector<int>{3, 2, 1});
    for (int n = 0; n <= 7; ++n) {
        long long via_contains = 0, via_structure = 0;
        enumerate_avoiding(p321, n, [&](const Permutation&) { ++via_contains; });
        enumerate(PermClass::all_perms, n, [&](const Permutation& pi) {
            if (excedance_structure_holds(pi)) ++via_structure;
        });
        CHECK(via_contains == via_structure);
    }
}
