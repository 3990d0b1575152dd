#include <doctest.h>

#include "catstat/closed_forms.hpp"
#include "catstat/oracle.hpp"

using namespace catstat;

namespace {
Rat coeff(const Series& s, std::initializer_list<std::pair<Var, int>> exps) {
    return s.coefficient(mono(exps));
}
}  // namespace

TEST_CASE("joint GF at order 3: x^3 + 2xq + q + q^2") {
    const Series f = gf_f321(3);
    CHECK(coeff(f, {{Var::x, 3}, {Var::t, 3}}) == 1);
    CHECK(coeff(f, {{Var::x, 1}, {Var::q, 1}, {Var::t, 3}}) == 2);
    CHECK(coeff(f, {{Var::q, 1}, {Var::t, 3}}) == 1);
    CHECK(coeff(f, {{Var::q, 2}, {Var::t, 3}}) == 1);
    CHECK(coeff(f, {{Var::t, 3}}) == 0);
    CHECK(coeff(f, {{Var::x, 2}, {Var::t, 3}}) == 0);
}

TEST_CASE("f321_q equals f321 at x = 1") {
    CHECK(!first_difference(gf_f321_q(12), set_value(gf_f321(12), Var::x, 1), Window::order(12)));
}

TEST_CASE("descent refinement collapses at p = 1") {
    CHECK(!first_difference(set_value(gf_f321_des(8), Var::p, 1), gf_f321(8), Window::order(8)));
}

TEST_CASE("coefficients of combinatorial series are nonnegative integers") {
    for (const Series& s : {gf_f321(7), gf_f132_x(7), gf_g(5, 6)}) {
        for (const auto& [m, c] : s.terms()) {
            CHECK(denominator(c) == 1);
            CHECK(c >= 0);
        }
    }
}

TEST_CASE("the shifted-tunnel GF at t = 0 is the geometric series in v") {
    const Series g = gf_g(4, 7);
    for (int r = 0; r <= 7; ++r) CHECK(coeff(g, {{Var::v, r}}) == 1);
    CHECK(coeff(g, {{Var::v, 3}, {Var::t, 0}, {Var::x, 1}}) == 0);
}

TEST_CASE("g at v=0 equals the joint closed form") {
    const Series g0 = set_value(gf_g(8, 2), Var::v, 0);
    CHECK(!first_difference(g0, gf_f321(8), Window::order(8)));
}

TEST_CASE("far-offset coefficients of g are Catalan numbers") {
    const Series g = gf_g(5, 8);
    for (int n = 0; n <= 5; ++n)
        for (int r = n; r <= 8; ++r) {
            CHECK(coeff(g, {{Var::v, r}, {Var::t, n}}) == catalan_number(n));
            if (n >= 1) CHECK(coeff(g, {{Var::x, 1}, {Var::v, r}, {Var::t, n}}) == 0);
        }
}

TEST_CASE("h1 matches its definitional sum on a small window") {
    const Interval band{-5, 5};
    const Series closed = gf_h1(4, band);
    const Series oracle = oracle_h1(4, band);
    Window req = Window::order(4);
    req[Var::v] = band;
    CHECK(!first_difference(closed, oracle, req));
}

TEST_CASE("h2 matches its definitional sum on a small window") {
    const Interval band{-5, 5};
    Window req = Window::order(4);
    req[Var::v] = band;
    CHECK(!first_difference(gf_h2(4, band), oracle_h2(4, band), req));
}

TEST_CASE("h3 matches its definitional sum on a small window") {
    const Interval band{-5, 5};
    Window req = Window::zorder(4);
    req[Var::y] = band;
    CHECK(!first_difference(gf_h3(4, band), oracle_h3(4, band), req));
}

TEST_CASE("h1 carries the common factor t") {
    const Series h1 = gf_h1(3, {-4, 4});
    for (const auto& [m, c] : h1.terms()) CHECK(m[Var::t] >= 1);
    CHECK(gf_h3(3, {-4, 4}).coefficient(Monomial{}) == 0);
}

TEST_CASE("trivial1 closed form") {
    const Series lhs = gf_trivial1(5, 8);
    const Series rhs = oracle_trivial1(5, 8);
    Window req = Window::order(5);
    req[Var::v] = {0, 8};
    CHECK(!first_difference(lhs, rhs, req));
}

TEST_CASE("name dispatch") {
    CHECK(gf_name_from_string("f132x") == GfName::f132_x);
    CHECK_THROWS_AS(gf_name_from_string("nope"), std::invalid_argument);
    const Series s = closed_form(GfName::catalan, GfParams{6, {}, {}});
    CHECK(coeff(s, {{Var::t, 6}}) == 132);
}
