#include "catstat/closed_forms.hpp"

#include <stdexcept>

namespace catstat {

namespace {

using TermList = std::vector<std::pair<Monomial, Rat>>;

Series poly(TermList terms) { return Series::polynomial(terms); }

const Monomial kUnit{};

// sqrt(1 - 2t(1+q) + t^2 * quad) where quad is the q,p-polynomial under t^2.
Series radical(int tmax, TermList quad) {
    TermList terms = {{kUnit, 1}, {mono({{Var::t, 1}}), -2}, {mono({{Var::q, 1}, {Var::t, 1}}), -2}};
    for (auto& [m, c] : quad) terms.emplace_back(m * mono({{Var::t, 2}}), c);
    return sqrt_unit(poly(std::move(terms)), Window::order(tmax));
}

Series radical_321(int tmax) {
    // (1-q)^2 under the t^2 term
    return radical(tmax, {{kUnit, 1}, {mono({{Var::q, 1}}), -2}, {mono({{Var::q, 2}}), 1}});
}

}  // namespace

Series gf_catalan(int tmax) {
    const Series rt = sqrt_unit(poly({{kUnit, 1}, {mono({{Var::t, 1}}), -4}}), Window::order(tmax + 1));
    const Series num = poly({{kUnit, 1}}) - rt;
    return num.shifted(mono({{Var::t, -1}}), Rat(1, 2));
}

Series gf_f321_q(int tmax) {
    const Series rt = radical_321(tmax + 1);
    const Series num =
        poly({{kUnit, 1}, {mono({{Var::q, 1}, {Var::t, 1}}), 1}, {mono({{Var::t, 1}}), -1}}) - rt;
    Series f = num.shifted(mono({{Var::q, -1}, {Var::t, -1}}), Rat(1, 2));
    // Counts paths by statistics, so the q exponents are genuinely >= 0.
    return f.with_support_floor(Var::q, {0, 0});
}

Series gf_f321(int tmax) {
    const Series den = poly({{kUnit, 1},
                             {mono({{Var::t, 1}}), 1},
                             {mono({{Var::q, 1}, {Var::t, 1}}), 1},
                             {mono({{Var::x, 1}, {Var::t, 1}}), -2}}) +
                       radical_321(tmax);
    return invert_unit(den, Window::order(tmax)).scaled(2);
}

Series gf_f321_des(int tmax) {
    // (1+q)^2 - 4qp under the t^2 term
    const Series rt = radical(tmax, {{kUnit, 1},
                                     {mono({{Var::q, 1}}), 2},
                                     {mono({{Var::q, 2}}), 1},
                                     {mono({{Var::q, 1}, {Var::p, 1}}), -4}});
    const Series den = poly({{kUnit, 1},
                             {mono({{Var::t, 1}}), 1},
                             {mono({{Var::q, 1}, {Var::t, 1}}), 1},
                             {mono({{Var::x, 1}, {Var::t, 1}}), -2}}) +
                       rt;
    return invert_unit(den, Window::order(tmax)).scaled(2);
}

Series gf_f132_x(int tmax) {
    const Series den = poly({{kUnit, 1},
                             {mono({{Var::t, 1}}), 2},
                             {mono({{Var::x, 1}, {Var::t, 1}}), -2}}) +
                       sqrt_unit(poly({{kUnit, 1}, {mono({{Var::t, 1}}), -4}}), Window::order(tmax));
    return invert_unit(den, Window::order(tmax)).scaled(2);
}

namespace {

// C evaluated at a degree-one image of t, exact for every offset exponent.
Series catalan_at(int tmax, const Monomial& image) {
    SubstMap map;
    map[Var::t] = SubstImage{Rat(1), image};
    Window target = Window::order(tmax);
    target[Var::z] = {0, image[Var::z] != 0 ? tmax : 0};
    target[Var::t] = {0, image[Var::t] != 0 ? tmax : 0};
    if (image[Var::z] != 0) {
        // keep the exponent lattice map invertible when t moves to z
        map[Var::z] = SubstImage{Rat(1), mono({{Var::t, 1}})};
    }
    return substitute(gf_catalan(tmax), map, target);
}

}  // namespace

Series gf_g(int tmax, int vmax) {
    const Window w = [&] {
        Window win = Window::order(tmax);
        win[Var::v] = {-kExpInf, vmax};
        return win;
    }();
    const Series ctv = catalan_at(tmax, mono({{Var::t, 1}, {Var::v, 1}}));
    const Series fq = gf_f321_q(tmax);
    const Series one_minus_v = poly({{kUnit, 1}, {mono({{Var::v, 1}}), -1}});
    const Series qm1tv = poly({{mono({{Var::q, 1}, {Var::t, 1}, {Var::v, 1}}), 1},
                               {mono({{Var::t, 1}, {Var::v, 1}}), -1}});
    const Series num1 = one_minus_v + qm1tv * ctv;
    const Series den1 = one_minus_v + qm1tv * fq;
    const Series inner = num1 * invert_unit(den1, w);
    const Series numer = inner - poly({{mono({{Var::x, 1}, {Var::t, 1}, {Var::v, 1}}), 1},
                                       {mono({{Var::t, 1}, {Var::v, 1}}), -1}}) *
                                     ctv;
    const Series den2 = poly({{kUnit, 1},
                              {mono({{Var::q, 1}, {Var::t, 1}}), 1},
                              {mono({{Var::x, 1}, {Var::t, 1}}), -1}}) -
                        poly({{mono({{Var::q, 1}, {Var::t, 1}}), 1}}) * fq;
    const Series g = numer * invert_unit(den2 * one_minus_v, w);
    // Each t^n coefficient marks two tunnel counts whose sum is at most n,
    // so the x and q degrees never exceed the grade.
    return g.with_support_floor(Var::v, {0, 0})
        .with_support_ceiling(Var::x, {0, 1})
        .with_support_ceiling(Var::q, {0, 1});
}

SubstMap dual_substitution() {
    SubstMap map;
    map[Var::x] = SubstImage{Rat(1), mono({{Var::x, 1}, {Var::q, -1}})};
    map[Var::q] = SubstImage{Rat(1), mono({{Var::q, -1}})};
    map[Var::t] = SubstImage{Rat(1), mono({{Var::q, 1}, {Var::t, 1}})};
    return map;
}

namespace {

Window vy_window(int tmax, Var var, Interval band, bool in_z = false) {
    Window w = in_z ? Window::zorder(tmax) : Window::order(tmax);
    w[var] = band;
    return w;
}

}  // namespace

Series gf_h1(int tmax, Interval vband) {
    const int inner_hi = std::max({vband.hi, -vband.lo, 0});
    const Series g = gf_g(tmax, inner_hi);

    const Series g_dual = substitute(g, dual_substitution(),
                                     vy_window(tmax, Var::v, {-kExpInf, inner_hi}));
    const Series g0 = set_value(g, Var::v, 0);
    SubstMap inv_v;
    inv_v[Var::v] = SubstImage{Rat(1), mono({{Var::v, -1}})};
    const Series g_inv = substitute(g, inv_v, vy_window(tmax, Var::v, {-inner_hi, kExpInf}));

    // -(sum over k <= -2 of v^k) * C(t/v): the downward expansion of
    // 1/(v(1-v)) times the tail Catalan factor.
    const Series tail = Series::geometric(Var::v, {vband.lo + 1, -1}, false)
                            .shifted(mono({{Var::v, -1}})) *
                        catalan_at(tmax, mono({{Var::t, 1}, {Var::v, -1}}));

    const Series xqm1 = poly({{mono({{Var::x, 1}}), 1}, {mono({{Var::q, 1}}), -1}, {kUnit, -1}});
    const Series bracket = poly({{mono({{Var::q, 1}}), 1}}) * g_dual + xqm1 * g0 + g_inv + tail;
    const Series h1 = poly({{mono({{Var::t, 1}}), 1}}) * bracket;
    return h1.with_support_floor(Var::v, {0, -1});
}

Series gf_h2(int tmax, Interval vband) {
    const int inner_hi = std::max({vband.hi, -vband.lo, 0});
    const Series g = gf_g(tmax, inner_hi);

    const Series g0 = set_value(g, Var::v, 0);
    SubstMap dual_inv = dual_substitution();
    dual_inv[Var::v] = SubstImage{Rat(1), mono({{Var::v, -1}})};
    const Series g_dual_inv = substitute(g, dual_inv, vy_window(tmax, Var::v, {-inner_hi, kExpInf}));

    const Series tail = Series::geometric(Var::v, {vband.lo, -1}, false) *
                        catalan_at(tmax, mono({{Var::q, 1}, {Var::t, 1}, {Var::v, -1}}));

    const Series h2 = g - g0 + g_dual_inv + tail;
    return h2.with_support_floor(Var::v, {0, -1});
}

Series gf_h3(int zmax, Interval yband) {
    const int inner_hi = std::max({yband.hi, -yband.lo, 0});
    const Series g = gf_g(zmax, inner_hi);
    const Series g0 = set_value(g, Var::v, 0);

    SubstMap rename;  // t <-> z, v <-> y
    rename[Var::t] = SubstImage{Rat(1), mono({{Var::z, 1}})};
    rename[Var::z] = SubstImage{Rat(1), mono({{Var::t, 1}})};
    rename[Var::v] = SubstImage{Rat(1), mono({{Var::y, 1}})};
    rename[Var::y] = SubstImage{Rat(1), mono({{Var::v, 1}})};
    const Series g_zy = substitute(g, rename, vy_window(zmax, Var::y, {-kExpInf, inner_hi}, true));
    const Series g0_z = substitute(g0, rename, Window::zorder(zmax));

    SubstMap dual_zy;  // x -> x/q, q -> 1/q, t -> qz, v -> 1/y (with the swaps)
    dual_zy[Var::x] = SubstImage{Rat(1), mono({{Var::x, 1}, {Var::q, -1}})};
    dual_zy[Var::q] = SubstImage{Rat(1), mono({{Var::q, -1}})};
    dual_zy[Var::t] = SubstImage{Rat(1), mono({{Var::q, 1}, {Var::z, 1}})};
    dual_zy[Var::z] = SubstImage{Rat(1), mono({{Var::t, 1}})};
    dual_zy[Var::v] = SubstImage{Rat(1), mono({{Var::y, -1}})};
    dual_zy[Var::y] = SubstImage{Rat(1), mono({{Var::v, -1}})};
    const Series g_dual_inv =
        substitute(g, dual_zy, vy_window(zmax, Var::y, {-inner_hi, kExpInf}, true));

    // -(y/(1-y)) C(zy), upward expansion.
    const Series tail_pos = Series::geometric(Var::y, {0, std::max(yband.hi, 0)}, true)
                                .shifted(mono({{Var::y, 1}}), Rat(-1)) *
                            catalan_at(zmax, mono({{Var::z, 1}, {Var::y, 1}}));
    // (1/(1-y)) C(qz/y), downward expansion.
    const Series tail_neg = Series::geometric(Var::y, {yband.lo, -1}, false) *
                            catalan_at(zmax, mono({{Var::q, 1}, {Var::z, 1}, {Var::y, -1}}));

    const Series h3 =
        g_zy + g_dual_inv - g0_z + tail_pos + tail_neg - Series::constant(1, Window::zorder(zmax));
    return h3.with_support_floor(Var::y, {0, -1}).with_support_ceiling(Var::y, {0, 1});
}

Series gf_trivial1(int tmax, int vmax) {
    const Series ctv = catalan_at(tmax, mono({{Var::t, 1}, {Var::v, 1}}));
    return Series::geometric(Var::v, {0, vmax}, true).shifted(mono({{Var::v, 1}})) * ctv;
}

GfName gf_name_from_string(const std::string& name) {
    if (name == "catalan") return GfName::catalan;
    if (name == "f321_q") return GfName::f321_q;
    if (name == "f321") return GfName::f321;
    if (name == "f321_des") return GfName::f321_des;
    if (name == "f132x" || name == "f132_x") return GfName::f132_x;
    if (name == "g" || name == "g_conj") return GfName::g_conj;
    if (name == "h1") return GfName::h1;
    if (name == "h2") return GfName::h2;
    if (name == "h3") return GfName::h3;
    throw std::invalid_argument("unknown series name: " + name);
}

std::string to_string(GfName name) {
    switch (name) {
        case GfName::catalan: return "catalan";
        case GfName::f321_q: return "f321_q";
        case GfName::f321: return "f321";
        case GfName::f321_des: return "f321_des";
        case GfName::f132_x: return "f132x";
        case GfName::g_conj: return "g";
        case GfName::h1: return "h1";
        case GfName::h2: return "h2";
        case GfName::h3: return "h3";
    }
    throw std::logic_error("unreachable");
}

Series closed_form(GfName name, const GfParams& params) {
    const int n = params.order;
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    const Interval vband = params.v.value_or(Interval{-(n + 2), n + 2});
    const Interval yband = params.y.value_or(Interval{-(n + 2), n + 2});
    switch (name) {
        case GfName::catalan: return gf_catalan(n);
        case GfName::f321_q: return gf_f321_q(n);
        case GfName::f321: return gf_f321(n);
        case GfName::f321_des: return gf_f321_des(n);
        case GfName::f132_x: return gf_f132_x(n);
        case GfName::g_conj: return gf_g(n, params.v ? params.v->hi : n + 2);
        case GfName::h1: return gf_h1(n, vband);
        case GfName::h2: return gf_h2(n, vband);
        case GfName::h3: return gf_h3(n, yband);
    }
    throw std::logic_error("unreachable");
}

}  // namespace catstat
