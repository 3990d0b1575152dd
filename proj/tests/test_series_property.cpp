// Property tests of the exactness contract: an operation on partially
// known series either refuses (window/support cannot be certified) or
// produces coefficients that agree with complete ground truth everywhere
// inside its claimed window.

#include <doctest.h>

#include <random>

#include "catstat/series.hpp"

using namespace catstat;

namespace {

struct Gen {
    std::mt19937 rng{988371};

    int uniform(int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    }

    // A complete random Laurent polynomial over x, q, t, v.
    Series poly(int vlo) {
        std::vector<std::pair<Monomial, Rat>> terms;
        const int k = uniform(1, 7);
        for (int i = 0; i < k; ++i) {
            Monomial m;
            m[Var::t] = uniform(0, 3);
            m[Var::v] = uniform(vlo, 4);
            m[Var::q] = uniform(0, 2);
            m[Var::x] = uniform(0, 1);
            terms.emplace_back(m, Rat(uniform(-3, 3)));
        }
        return Series::polynomial(terms);
    }

    // The same polynomial as a partially known series: terms outside a
    // random window dropped, and the tight support certificate replaced
    // by a weaker (but still valid) one.
    Series partial(const Series& full, int vfloor) {
        Window w;
        w[Var::t] = {0, uniform(0, 4)};
        w[Var::v] = {uniform(-5, -2), uniform(0, 5)};
        Series::Terms kept;
        for (const auto& [m, c] : full.terms())
            if (w.contains(m)) kept.emplace(m, c);
        Support s;  // universal x/q/t/z bounds
        s.lo[static_cast<size_t>(Var::v)] = {vfloor, 0};
        for (Var absent : {Var::y, Var::z, Var::p}) {
            s.lo[static_cast<size_t>(absent)] = {0, 0};
            s.hi[static_cast<size_t>(absent)] = {0, 0};
        }
        return Series(std::move(kept), w, s);
    }
};

// Coefficient of a complete polynomial (exact everywhere).
Rat truth_coeff(const Series& full, const Monomial& m) {
    const auto it = full.terms().find(m);
    return it == full.terms().end() ? Rat(0) : it->second;
}

bool claimed(const Series& s, const Monomial& m) {
    for (int i = 0; i < kVarCount; ++i) {
        const Var var = static_cast<Var>(i);
        if (!s.effective_band(var, m.grade()).contains(m[var])) return false;
    }
    return true;
}

void compare_against_truth(const Series& result, const Series& truth) {
    Monomial m;
    for (int t = 0; t <= 8; ++t)
        for (int v = -10; v <= 10; ++v)
            for (int q = 0; q <= 5; ++q)
                for (int x = 0; x <= 3; ++x) {
                    m[Var::t] = t;
                    m[Var::v] = v;
                    m[Var::q] = q;
                    m[Var::x] = x;
                    if (!claimed(result, m)) continue;
                    CHECK(result.coefficient(m) == truth_coeff(truth, m));
                }
}

}  // namespace

TEST_CASE("windowed products match complete ground truth wherever claimed") {
    Gen gen;
    for (int trial = 0; trial < 150; ++trial) {
        const Series fa = gen.poly(-4), fb = gen.poly(-4);
        const Series truth = fa * fb;  // complete operands: exact everywhere
        const Series pa = gen.partial(fa, -4), pb = gen.partial(fb, -4);
        try {
            compare_against_truth(pa * pb, truth);
        } catch (const std::domain_error&) {
            // refusing to certify is always allowed
        }
    }
}

TEST_CASE("windowed sums match complete ground truth wherever claimed") {
    Gen gen;
    for (int trial = 0; trial < 150; ++trial) {
        const Series fa = gen.poly(-4), fb = gen.poly(-4);
        const Series truth = fa + fb;
        compare_against_truth(gen.partial(fa, -4) + gen.partial(fb, -4), truth);
    }
}

TEST_CASE("substitution on partial series matches transformed ground truth") {
    Gen gen;
    SubstMap inv_v;
    inv_v[Var::v] = SubstImage{Rat(1), mono({{Var::v, -1}})};
    SubstMap shear;
    shear[Var::t] = SubstImage{Rat(1), mono({{Var::t, 1}, {Var::v, 1}})};
    for (int trial = 0; trial < 150; ++trial) {
        const Series full = gen.poly(trial % 2 ? -4 : 0);
        const Series part = gen.partial(full, trial % 2 ? -4 : 0);
        for (const SubstMap* map : {&inv_v, &shear}) {
            Window target;
            target[Var::t] = {0, gen.uniform(0, 4)};
            target[Var::v] = {gen.uniform(-6, -1), gen.uniform(0, 6)};
            Series truth_img = substitute(full, *map, [&] {
                Window w;
                w[Var::t] = {0, 8};
                w[Var::v] = {-12, 12};
                return w;
            }());
            try {
                compare_against_truth(substitute(part, *map, target), truth_img);
            } catch (const std::domain_error&) {
            }
        }
    }
}

TEST_CASE("diagonal extraction on partial series matches ground truth") {
    Gen gen;
    for (int trial = 0; trial < 150; ++trial) {
        const Series full = gen.poly(0);
        const Series part = gen.partial(full, 0);
        const Series truth = diagonal(full.truncated(Window::order(4).band(Var::v, -12, 12)),
                                      Var::v, Var::t, Var::z);
        const Series got = diagonal(part, Var::v, Var::t, Var::z);
        Monomial m;
        for (int z = 0; z <= 4; ++z)
            for (int q = 0; q <= 5; ++q)
                for (int x = 0; x <= 3; ++x) {
                    m[Var::z] = z;
                    m[Var::q] = q;
                    m[Var::x] = x;
                    if (!claimed(got, m) || !claimed(truth, m)) continue;
                    CHECK(got.coefficient(m) == truth.coefficient(m));
                }
    }
}

TEST_CASE("inversion inverts: a * invert(a) = 1 inside the window") {
    Gen gen;
    for (int trial = 0; trial < 60; ++trial) {
        // unit constant plus nonnegative-exponent noise
        std::vector<std::pair<Monomial, Rat>> terms = {{Monomial{}, 1}};
        const int k = gen.uniform(1, 5);
        for (int i = 0; i < k; ++i) {
            Monomial m;
            m[Var::t] = gen.uniform(0, 2);
            m[Var::v] = gen.uniform(0, 2);
            m[Var::q] = gen.uniform(0, 1);
            if (m == Monomial{} || (m[Var::t] == 0 && m[Var::v] == 0)) m[Var::v] = 1;
            terms.emplace_back(m, Rat(gen.uniform(-2, 2)));
        }
        const Series a = Series::polynomial(terms);
        Window w;
        w[Var::t] = {0, 5};
        w[Var::v] = {-kExpInf, 6};
        const Series inv = invert_unit(a, w);
        Window req;
        req[Var::t] = {0, 5};
        req[Var::v] = {0, 6};
        CHECK(!first_difference(a * inv, Series::polynomial({{Monomial{}, 1}}), req));
    }
}

TEST_CASE("square roots square back: sqrt(a)^2 = a inside the window") {
    Gen gen;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::pair<Monomial, Rat>> terms = {{Monomial{}, 1}};
        const int k = gen.uniform(1, 5);
        for (int i = 0; i < k; ++i) {
            Monomial m;
            m[Var::t] = gen.uniform(1, 3);
            m[Var::q] = gen.uniform(0, 2);
            m[Var::p] = gen.uniform(0, 1);
            terms.emplace_back(m, Rat(gen.uniform(-4, 4)));
        }
        const Series a = Series::polynomial(terms);
        const Series rt = sqrt_unit(a, Window::order(6));
        CHECK(!first_difference(rt * rt, a, Window::order(6)));
    }
}
