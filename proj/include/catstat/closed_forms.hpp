#pragma once

#include <optional>
#include <string>

#include "catstat/series.hpp"

namespace catstat {

/// Truncated expansions of the closed-form generating functions.
///
/// All of them are exact inside the returned window.  The h-family
/// combines substituted copies of the conjectured shifted-tunnel GF with
/// directed geometric expansions of the 1/(1-v) prefactors; which
/// direction each prefactor expands in is forced by the range-completion
/// identities the formulas come from and is pinned by unit tests.

/// C(t): Catalan GF, (1 - sqrt(1-4t)) / (2t).
Series gf_catalan(int tmax);

/// Hill/double-rise GF with the hill variable removed:
/// (1 + t(q-1) - sqrt(1 - 2t(1+q) + t^2 (1-q)^2)) / (2qt).
Series gf_f321_q(int tmax);

/// Joint fixed-point/excedance GF of the 321-avoiding class:
/// 2 / (1 + t(1+q-2x) + sqrt(1 - 2t(1+q) + t^2 (1-q)^2)).
Series gf_f321(int tmax);

/// Same with descents marked by p (the t^2 radicand term becomes
/// (1+q)^2 - 4qp).
Series gf_f321_des(int tmax);

/// Fixed-point GF of the 132-avoiding class:
/// 2 / (1 + 2t(1-x) + sqrt(1-4t)).
Series gf_f132_x(int tmax);

/// Conjectured closed form of the shifted-tunnel GF
/// G(x,q,t,v) = sum over paths and reference-line offsets r >= 0 of
/// x^{ct_r} q^{lt_r} v^r t^n.
Series gf_g(int tmax, int vmax);

/// Closed forms of the three decomposition GFs (v and y windows chosen by
/// the caller; inner windows are padded as required).
Series gf_h1(int tmax, Interval vband);
Series gf_h2(int tmax, Interval vband);
Series gf_h3(int zmax, Interval yband);

/// (v/(1-v)) C(tv): closed form of the r > n tail.
Series gf_trivial1(int tmax, int vmax);

/// The involutive reweighting x -> x/q, q -> 1/q, t -> qt.
SubstMap dual_substitution();

enum class GfName { catalan, f321_q, f321, f321_des, f132_x, g_conj, h1, h2, h3 };

GfName gf_name_from_string(const std::string& name);
std::string to_string(GfName name);

struct GfParams {
    int order = 8;
    std::optional<Interval> v;  // v-window (g_conj/h1/h2) or ignored
    std::optional<Interval> y;  // y-window (h3)
};

/// Dispatcher with per-name default windows derived from the order.
Series closed_form(GfName name, const GfParams& params);

}  // namespace catstat
