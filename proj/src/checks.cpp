#include "catstat/checks.hpp"

#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "catstat/bijections.hpp"
#include "catstat/closed_forms.hpp"
#include "catstat/oracle.hpp"

namespace catstat {

namespace {

std::string key_str(const std::vector<int>& key) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < key.size(); ++i) {
        if (i) out << ',';
        out << key[i];
    }
    out << ')';
    return out.str();
}

struct TableDiff {
    std::vector<int> key;
    long long lhs = 0, rhs = 0;
};

std::optional<TableDiff> first_table_difference(const DistributionTable& a,
                                                const DistributionTable& b) {
    auto ia = a.entries.begin(), ib = b.entries.begin();
    while (ia != a.entries.end() || ib != b.entries.end()) {
        if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
            return TableDiff{ia->first, ia->second, 0};
        }
        if (ia == a.entries.end() || ib->first < ia->first) {
            return TableDiff{ib->first, 0, ib->second};
        }
        if (ia->second != ib->second) return TableDiff{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

std::string mismatch_str(const SeriesMismatch& m) {
    return "monomial " + m.monomial.str() + ": lhs = " + rat_str(m.lhs) +
           ", rhs = " + rat_str(m.rhs);
}

// The oracle side of a GF comparison: sum of t^n times the distribution
// polynomial of each size.
Series stat_gf_oracle(PermClass c, int order, const std::vector<StatName>& stats,
                      const std::vector<Var>& marks) {
    Series::Terms terms;
    for (int n = 0; n <= order; ++n) {
        const DistributionTable table = distribution(c, n, stats);
        for (const auto& [key, count] : table.entries) {
            Monomial m = mono({{Var::t, n}});
            for (size_t i = 0; i < marks.size(); ++i) m[marks[i]] += key[i];
            terms[m] += Rat(count);
        }
    }
    Series base = Series::polynomial({terms.begin(), terms.end()});
    Window w = base.window();
    w[Var::t] = {0, order};
    return base.truncated(w);
}

using Params = std::map<std::string, long long>;

long long param(const Params& p, const std::string& name) { return p.at(name); }

void require_range(const Params& p, const std::string& name, long long lo, long long hi) {
    const long long v = param(p, name);
    if (v < lo || v > hi)
        throw std::invalid_argument("parameter " + name + " = " + std::to_string(v) +
                                    " outside allowed range [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
}

// ---- individual checks --------------------------------------------------

bool check_theorem_main(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    for (int m = 0; m <= n; ++m) {
        const DistributionTable a = distribution(PermClass::avoid_321, m, {StatName::fp, StatName::exc});
        const DistributionTable b = distribution(PermClass::avoid_132, m, {StatName::fp, StatName::exc});
        if (const auto diff = first_table_difference(a, b)) {
            detail = "n=" + std::to_string(m) + ", (fp,exc)=" + key_str(diff->key) + ": avoid_321 count " +
                     std::to_string(diff->lhs) + " != avoid_132 count " + std::to_string(diff->rhs);
            return false;
        }
        if (m == 3) {
            // pinned witness: x^3 + 2xq + q^2 + q
            const DistributionTable expected{
                "avoid_321", 3, {StatName::fp, StatName::exc},
                {{{3, 0}, 1}, {{1, 1}, 2}, {{0, 1}, 1}, {{0, 2}, 1}}};
            if (const auto diff = first_table_difference(a, expected)) {
                detail = "n=3 witness mismatch at (fp,exc)=" + key_str(diff->key) + ": got " +
                         std::to_string(diff->lhs) + ", expected " + std::to_string(diff->rhs);
                return false;
            }
        }
    }
    detail = "joint (fp,exc) distributions of S_n(321) and S_n(132) agree for n <= " +
             std::to_string(n);
    return true;
}

bool check_catalan_counts(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    std::vector<Pattern> patterns;
    enumerate(PermClass::all_perms, 3, [&](const Permutation& pi) { patterns.push_back(pi); });
    for (const Pattern& sigma : patterns) {
        for (int m = 0; m <= n; ++m) {
            long long count = 0;
            enumerate_avoiding(sigma, m, [&](const Permutation&) { ++count; });
            if (count != catalan_number(m)) {
                detail = "|S_" + std::to_string(m) + "(" + to_string(sigma) + ")| = " +
                         std::to_string(count) + " != C_" + std::to_string(m) + " = " +
                         std::to_string(catalan_number(m));
                return false;
            }
        }
    }
    detail = "all six length-3 patterns give Catalan counts for n <= " + std::to_string(n);
    return true;
}

bool check_transport_rs(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    for (int m = 0; m <= n; ++m) {
        std::set<DyckPath> images;
        bool ok = true;
        enumerate(PermClass::avoid_321, m, [&](const Permutation& pi) {
            if (!ok) return;
            const DyckPath d = rs(pi);
            const PermStats ps = perm_stats(pi);
            const PathStats ds = path_stats(d);
            if (ps.fp != ds.hills || ps.exc != ds.double_rises || ps.des != count_uud(d)) {
                detail = "pi=" + to_string(pi) + ": (fp,exc,des)=(" + std::to_string(ps.fp) + "," +
                         std::to_string(ps.exc) + "," + std::to_string(ps.des) +
                         ") but rs image " + to_string(d) + " has (h,dr,uud)=(" +
                         std::to_string(ds.hills) + "," + std::to_string(ds.double_rises) + "," +
                         std::to_string(count_uud(d)) + ")";
                ok = false;
                return;
            }
            if (rs_via_minima(pi) != d || rs_via_staircase(pi) != d) {
                detail = "pi=" + to_string(pi) + ": the three constructions of rs disagree";
                ok = false;
                return;
            }
            if (rs_inverse(d) != pi) {
                detail = "pi=" + to_string(pi) + ": rs_inverse(rs(pi)) = " +
                         to_string(rs_inverse(d));
                ok = false;
                return;
            }
            images.insert(d);
        });
        if (!ok) return false;
        if (static_cast<long long>(images.size()) != catalan_number(m)) {
            detail = "rs not injective onto D_" + std::to_string(m) + ": " +
                     std::to_string(images.size()) + " images, expected " +
                     std::to_string(catalan_number(m));
            return false;
        }
    }
    detail = "rs transports (fp,exc,des) to (hills,double rises,uud) bijectively for n <= " +
             std::to_string(n);
    return true;
}

bool check_transport_krat(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    for (int m = 0; m <= n; ++m) {
        std::set<DyckPath> images;
        bool ok = true;
        enumerate(PermClass::avoid_132, m, [&](const Permutation& pi) {
            if (!ok) return;
            const DyckPath d = krat(pi);
            const PermStats ps = perm_stats(pi);
            const TunnelStats ts = tunnel_stats(d, 0);
            if (ps.fp != ts.ct || ps.exc != ts.lt) {
                detail = "pi=" + to_string(pi) + ": (fp,exc)=(" + std::to_string(ps.fp) + "," +
                         std::to_string(ps.exc) + ") but krat image " + to_string(d) +
                         " has (ct,lt)=(" + std::to_string(ts.ct) + "," + std::to_string(ts.lt) +
                         ")";
                ok = false;
                return;
            }
            if (krat_inverse(d) != pi) {
                detail = "pi=" + to_string(pi) + ": krat_inverse(krat(pi)) = " +
                         to_string(krat_inverse(d));
                ok = false;
                return;
            }
            images.insert(d);
        });
        if (!ok) return false;
        if (static_cast<long long>(images.size()) != catalan_number(m)) {
            detail = "krat not injective onto D_" + std::to_string(m);
            return false;
        }
    }
    detail = "krat transports (fp,exc) to (centered,left) tunnels bijectively for n <= " +
             std::to_string(n);
    return true;
}

bool check_transport_bjs(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    for (int m = 0; m <= n; ++m) {
        std::set<DyckPath> images, images4;
        bool ok = true;
        enumerate(PermClass::avoid_321, m, [&](const Permutation& pi) {
            if (!ok) return;
            const DyckPath d = staircase_bijection(pi, StairVariant::bjs);
            if (perm_stats(pi).exc != path_stats(d).valleys) {
                detail = "pi=" + to_string(pi) + ": exc=" + std::to_string(perm_stats(pi).exc) +
                         " but bjs image " + to_string(d) + " has va=" +
                         std::to_string(path_stats(d).valleys);
                ok = false;
                return;
            }
            if (bjs_inverse(d) != pi) {
                detail = "pi=" + to_string(pi) + ": bjs_inverse(bjs(pi)) = " +
                         to_string(bjs_inverse(d));
                ok = false;
                return;
            }
            const DyckPath d4 = staircase_bijection(pi, StairVariant::bij4);
            if (d4 != staircase_bijection(inverse(pi), StairVariant::bjs) ||
                staircase_inverse(d4, StairVariant::bij4) != pi) {
                detail = "pi=" + to_string(pi) + ": bij4 does not round-trip";
                ok = false;
                return;
            }
            images.insert(d);
            images4.insert(d4);
        });
        if (!ok) return false;
        if (static_cast<long long>(images.size()) != catalan_number(m) ||
            static_cast<long long>(images4.size()) != catalan_number(m)) {
            detail = "bjs/bij4 not injective onto D_" + std::to_string(m);
            return false;
        }
    }
    detail = "bjs sends excedances to valleys bijectively (and bij4 = bjs o inverse) for n <= " +
             std::to_string(n);
    return true;
}

bool check_transport_kra(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    for (int m = 0; m <= n; ++m) {
        std::set<DyckPath> images;
        bool ok = true;
        enumerate(PermClass::avoid_321, m, [&](const Permutation& pi) {
            if (!ok) return;
            const DyckPath d = staircase_bijection(pi, StairVariant::kra);
            const PermStats ps = perm_stats(pi);
            const PathStats ds = path_stats(d);
            if (ps.fp != ds.hills || ps.exc != ds.peaks_ge2) {
                detail = "pi=" + to_string(pi) + ": (fp,exc)=(" + std::to_string(ps.fp) + "," +
                         std::to_string(ps.exc) + ") but kra image " + to_string(d) +
                         " has (h,p2)=(" + std::to_string(ds.hills) + "," +
                         std::to_string(ds.peaks_ge2) + ")";
                ok = false;
                return;
            }
            if (d != rs(inverse(pi))) {
                detail = "pi=" + to_string(pi) + ": kra(pi) != rs(pi^-1)";
                ok = false;
                return;
            }
            if (kra_inverse(d) != pi) {
                detail = "pi=" + to_string(pi) + ": kra_inverse(kra(pi)) = " +
                         to_string(kra_inverse(d));
                ok = false;
                return;
            }
            images.insert(d);
        });
        if (!ok) return false;
        if (static_cast<long long>(images.size()) != catalan_number(m)) {
            detail = "kra not injective onto D_" + std::to_string(m);
            return false;
        }
    }
    detail = "kra sends (fp,exc) to (hills,peaks>=2) bijectively and equals rs o inverse for n <= " +
             std::to_string(n);
    return true;
}

bool series_check(const Series& lhs, const Series& rhs, const Window& required,
                  std::string& detail, const std::string& what) {
    if (const auto diff = first_difference(lhs, rhs, required)) {
        detail = what + " mismatch at " + mismatch_str(*diff);
        return false;
    }
    return true;
}

bool check_f321_matches_oracle(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const Series closed = gf_f321(order);
    const Series oracle = stat_gf_oracle(PermClass::avoid_321, order,
                                         {StatName::fp, StatName::exc}, {Var::x, Var::q});
    if (!series_check(closed, oracle, Window::order(order), detail, "joint (fp,exc) GF"))
        return false;
    detail = "closed form matches the (fp,exc) enumeration of the 321-avoiding class through t^" +
             std::to_string(order);
    return true;
}

bool check_f321_des_matches_oracle(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const Series closed = gf_f321_des(order);
    const Series oracle =
        stat_gf_oracle(PermClass::avoid_321, order, {StatName::fp, StatName::exc, StatName::des},
                       {Var::x, Var::q, Var::p});
    if (!series_check(closed, oracle, Window::order(order), detail, "triple-statistic GF"))
        return false;
    detail = "closed form matches the (fp,exc,des) enumeration through t^" + std::to_string(order);
    return true;
}

bool check_f132x_matches_oracle(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const Series closed = gf_f132_x(order);
    const Series oracle =
        stat_gf_oracle(PermClass::avoid_132, order, {StatName::fp}, {Var::x});
    if (!series_check(closed, oracle, Window::order(order), detail, "fixed-point GF"))
        return false;
    detail = "closed form matches the fp enumeration of the 132-avoiding class through t^" +
             std::to_string(order);
    return true;
}

bool check_functional_eq(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const Series f = gf_f321(order);
    const Series fq = set_value(f, Var::x, 1);
    const Series one = Series::polynomial({{Monomial{}, 1}});
    const Series factor = Series::polynomial({{mono({{Var::x, 1}}), 1}}) +
                          Series::polynomial({{mono({{Var::q, 1}}), 1}}) * (fq - one);
    const Series residual =
        f - one - Series::polynomial({{mono({{Var::t, 1}}), 1}}) * factor * f;
    if (!series_check(residual, Series::zero(Window::order(order)), Window::order(order), detail,
                      "functional-equation residual"))
        return false;
    detail = "F = 1 + t(x + q(F(1,q,t)-1))F holds identically through t^" + std::to_string(order);
    return true;
}

bool check_g_matches_oracle(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const int vmax = static_cast<int>(param(p, "vmax"));
    const int widen = static_cast<int>(param(p, "widen"));
    Window required = Window::order(order);
    required[Var::v] = {0, vmax};
    const Series closed = gf_g(order, vmax);
    const Series oracle = oracle_g(order, vmax);
    if (!series_check(closed, oracle, required, detail, "shifted-tunnel GF")) return false;
    const Series wide = gf_g(order, vmax + widen);
    if (!series_check(closed, wide, required, detail, "window-stability (widened by " +
                                                          std::to_string(widen) + ")"))
        return false;
    detail = "closed form matches the definitional shifted-tunnel sum through t^" +
             std::to_string(order) + ", v^0..v^" + std::to_string(vmax) + "; window-stable";
    return true;
}

bool check_g_at_v0(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const Series g0 = set_value(gf_g(order, 2), Var::v, 0);
    const Series f = gf_f321(order);
    if (!series_check(g0, f, Window::order(order), detail, "offset-zero specialization"))
        return false;
    detail = "the shifted-tunnel GF at v=0 equals the joint (fp,exc) closed form through t^" +
             std::to_string(order);
    return true;
}

bool check_dual_identity(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const int vmax = static_cast<int>(param(p, "vmax"));
    Window target = Window::order(order);
    target[Var::v] = {-kExpInf, vmax};
    const Series lhs = substitute(gf_g(order, vmax), dual_substitution(), target);
    const Series rhs = oracle_g_reflected(order, vmax);
    Window required = Window::order(order);
    required[Var::v] = {0, vmax};
    if (!series_check(lhs, rhs, required, detail, "reflection identity")) return false;
    detail = "G(x/q,1/q,qt,v) matches the reflected-statistics sum through t^" +
             std::to_string(order);
    return true;
}

bool check_trivial1_identity(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const int vmax = static_cast<int>(param(p, "vmax"));
    Window required = Window::order(order);
    required[Var::v] = {0, vmax};
    if (!series_check(gf_trivial1(order, vmax), oracle_trivial1(order, vmax), required, detail,
                      "far-offset tail"))
        return false;
    detail = "the r > n tail equals (v/(1-v)) C(tv) through t^" + std::to_string(order) +
             ", v^0..v^" + std::to_string(vmax);
    return true;
}

bool check_h_formulas(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const Interval band{static_cast<int>(param(p, "wlo")), static_cast<int>(param(p, "whi"))};
    const std::string note =
        " [note: the uAd sum marks q by the left-tunnel count lt_{-k}; marking by ct_{-k} fails]";

    Window req_t = Window::order(order);
    req_t[Var::v] = band;
    if (!series_check(gf_h1(order, band), oracle_h1(order, band), req_t, detail, "H1")) {
        detail += note;
        return false;
    }
    if (!series_check(gf_h2(order, band), oracle_h2(order, band), req_t, detail, "H2"))
        return false;
    Window req_z = Window::zorder(order);
    req_z[Var::y] = band;
    if (!series_check(gf_h3(order, band), oracle_h3(order, band), req_z, detail, "H3"))
        return false;
    detail = "H1, H2, H3 closed forms match their definitional sums through order " +
             std::to_string(order) + " on [" + std::to_string(band.lo) + ", " +
             std::to_string(band.hi) + "]" + note;
    return true;
}

Series lemma_diagonal(int order, Interval vband) {
    const Series h1 = gf_h1(order, vband);
    SubstMap v_over_y;
    v_over_y[Var::v] = SubstImage{Rat(1), mono({{Var::v, 1}, {Var::y, -1}})};
    Window w1 = Window::order(order);
    w1[Var::v] = vband;
    w1[Var::y] = {-vband.hi, -vband.lo};
    const Series h1p = substitute(h1, v_over_y, w1);

    const Series h2 = gf_h2(order, vband);
    SubstMap t_times_y;
    t_times_y[Var::t] = SubstImage{Rat(1), mono({{Var::t, 1}, {Var::y, 1}})};
    Window w2 = Window::order(order);
    w2[Var::v] = vband;
    const Series h2p = substitute(h2, t_times_y, w2);

    return diagonal(h1p * h2p, Var::v, Var::t, Var::z);
}

bool check_lemma_diag(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    const Interval yband{static_cast<int>(param(p, "ylo")), static_cast<int>(param(p, "yhi"))};
    const Interval vband{static_cast<int>(param(p, "vlo")), static_cast<int>(param(p, "vhi"))};
    const int widen = static_cast<int>(param(p, "widen"));

    Window required = Window::zorder(order);
    required[Var::y] = yband;

    const Series diag = lemma_diagonal(order, vband);
    const Series h3 = gf_h3(order, yband);
    if (!series_check(diag, h3, required, detail, "diagonal identity")) return false;

    const Series diag_wide = lemma_diagonal(order, {vband.lo - widen, vband.hi + widen});
    if (!series_check(diag, diag_wide, required, detail,
                      "window-stability (widened by " + std::to_string(widen) + ")"))
        return false;
    const Series h3_wide = gf_h3(order, {yband.lo - widen, yband.hi + widen});
    if (!series_check(h3, h3_wide, required, detail, "window-stability of H3")) return false;

    detail = "diag of H1(x,q,t,v/y) H2(x,q,ty,v) equals H3(x,q,z,y) through z^" +
             std::to_string(order) + ", y in [" + std::to_string(yband.lo) + ", " +
             std::to_string(yband.hi) + "]; window-stable";
    return true;
}

bool check_involutions(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    for (int m = 0; m <= n; ++m) {
        bool ok = true;
        enumerate_dyck(m, [&](const DyckPath& d) {
            if (!ok) return;
            const PathStats s = path_stats(d);
            const DyckPath e1 = involution(d, InvolutionKind::va_dr);
            const PathStats s1 = path_stats(e1);
            if (involution(e1, InvolutionKind::va_dr) != d || s1.valleys != s.double_rises ||
                s1.double_rises != s.valleys) {
                detail = "va_dr involution fails on " + to_string(d);
                ok = false;
                return;
            }
            const DyckPath e2 = involution(d, InvolutionKind::dr_p2);
            const PathStats s2 = path_stats(e2);
            if (involution(e2, InvolutionKind::dr_p2) != d || s2.double_rises != s.peaks_ge2 ||
                s2.peaks_ge2 != s.double_rises || s2.hills != s.hills) {
                detail = "dr_p2 involution fails on " + to_string(d);
                ok = false;
                return;
            }
        });
        if (!ok) return false;
    }
    detail = "both involutions swap their statistics (va<->dr; dr<->p2 keeping hills) on D_n, n <= " +
             std::to_string(n);
    return true;
}

bool check_weak_exc_shift(const Params& p, std::string& detail) {
    const int n = static_cast<int>(param(p, "n"));
    for (int m = 0; m <= n; ++m) {
        for (PermClass c : {PermClass::avoid_321, PermClass::avoid_132}) {
            std::map<int, long long> by_exc, by_wexc;
            enumerate(c, m, [&](const Permutation& pi) {
                const PermStats s = perm_stats(pi);
                ++by_exc[s.exc];
                ++by_wexc[s.wexc];
            });
            for (int k = 0; k < m; ++k) {
                const long long lhs = by_exc.count(k) ? by_exc[k] : 0;
                const long long rhs = by_wexc.count(k + 1) ? by_wexc[k + 1] : 0;
                if (lhs != rhs) {
                    detail = to_string(c) + ", n=" + std::to_string(m) + ", k=" +
                             std::to_string(k) + ": #{exc=k} = " + std::to_string(lhs) +
                             " != #{wexc=k+1} = " + std::to_string(rhs);
                    return false;
                }
            }
        }
        // the composed involution witnesses the shift on the 321 class
        if (m == 0) continue;  // the empty permutation has no weak excedance
        std::set<Permutation> images;
        bool ok = true;
        long long total = 0;
        enumerate(PermClass::avoid_321, m, [&](const Permutation& pi) {
            if (!ok) return;
            ++total;
            const Permutation sigma = weak_excedance_shift_map(pi);
            if (contains(sigma, Permutation(std::vector<int>{3, 2, 1})) ||
                perm_stats(sigma).wexc != perm_stats(pi).exc + 1) {
                detail = "shift witness fails on pi=" + to_string(pi) + " -> " + to_string(sigma);
                ok = false;
                return;
            }
            images.insert(sigma);
        });
        if (!ok) return false;
        if (static_cast<long long>(images.size()) != total) {
            detail = "shift witness not injective on S_" + std::to_string(m) + "(321)";
            return false;
        }
    }
    detail = "#{exc=k} = #{wexc=k+1} in both classes for n <= " + std::to_string(n) +
             ", with an explicit witness map on the 321 class";
    return true;
}

bool check_negative_control(const Params& p, std::string& detail) {
    const int order = static_cast<int>(param(p, "order"));
    // A corrupted coefficient must be caught and located.
    const Series closed = gf_f132_x(order);
    const Series oracle = stat_gf_oracle(PermClass::avoid_132, order, {StatName::fp}, {Var::x});
    const Monomial bad = mono({{Var::x, 1}, {Var::t, 2}});
    const Series corrupted = closed + Series::polynomial({{bad, 1}});
    const auto diff = first_difference(corrupted, oracle, Window::order(order));
    if (!diff) {
        detail = "corrupted coefficient was not detected";
        return false;
    }
    if (diff->monomial != bad || diff->lhs != diff->rhs + 1) {
        detail = "corruption misreported: " + mismatch_str(*diff);
        return false;
    }
    // A corrupted distribution table must be caught and located.
    const DistributionTable good = distribution(PermClass::avoid_321, 3, {StatName::fp, StatName::exc});
    DistributionTable tampered = good;
    ++tampered.entries[{1, 1}];
    const auto tdiff = first_table_difference(tampered, good);
    if (!tdiff || tdiff->key != std::vector<int>{1, 1} || tdiff->lhs != tdiff->rhs + 1) {
        detail = "corrupted table was not detected at the right entry";
        return false;
    }
    detail = "deliberate corruptions are detected and located (series monomial " + bad.str() +
             "; table entry (1,1))";
    return true;
}

struct CheckSpec {
    std::string id;
    Params defaults;
    bool (*fn)(const Params&, std::string&);
    void (*validate)(const Params&);
};

void validate_perm_n(const Params& p) { require_range(p, "n", 0, kMaxPermEnumeration); }
void validate_dyck_n(const Params& p) { require_range(p, "n", 0, kMaxDyckEnumeration); }
void validate_order12(const Params& p) { require_range(p, "order", 0, 12); }

// checks that enumerate permutations cannot exceed the enumeration ceiling
void validate_order_enum(const Params& p) { require_range(p, "order", 0, kMaxPermEnumeration); }

void validate_g(const Params& p) {
    require_range(p, "order", 0, 9);
    require_range(p, "vmax", 0, 24);
    if (p.count("widen")) require_range(p, "widen", 0, 8);
}

void validate_h(const Params& p) {
    require_range(p, "order", 0, 7);
    require_range(p, "wlo", -24, 0);
    require_range(p, "whi", 0, 24);
}

void validate_lemma(const Params& p) {
    require_range(p, "order", 0, 7);
    require_range(p, "ylo", -24, 0);
    require_range(p, "yhi", 0, 24);
    require_range(p, "vlo", -24, 0);
    require_range(p, "vhi", 0, 48);
    require_range(p, "widen", 0, 8);
}

const std::vector<CheckSpec>& specs() {
    static const std::vector<CheckSpec> table = {
        {"catalan_counts", {{"n", 9}}, check_catalan_counts, validate_perm_n},
        {"theorem_main", {{"n", 9}}, check_theorem_main, validate_perm_n},
        {"transport_rs", {{"n", 9}}, check_transport_rs, validate_perm_n},
        {"transport_krat", {{"n", 9}}, check_transport_krat, validate_perm_n},
        {"transport_bjs", {{"n", 9}}, check_transport_bjs, validate_perm_n},
        {"transport_kra", {{"n", 9}}, check_transport_kra, validate_perm_n},
        {"f321_matches_oracle", {{"order", 9}}, check_f321_matches_oracle, validate_order_enum},
        {"f321_des_matches_oracle", {{"order", 8}}, check_f321_des_matches_oracle, validate_order_enum},
        {"f132x_matches_oracle", {{"order", 9}}, check_f132x_matches_oracle, validate_order_enum},
        {"functional_eq", {{"order", 12}}, check_functional_eq, validate_order12},
        {"g_matches_oracle", {{"order", 7}, {"vmax", 9}, {"widen", 2}}, check_g_matches_oracle,
         validate_g},
        {"g_at_v0", {{"order", 12}}, check_g_at_v0, validate_order12},
        {"dual_identity", {{"order", 7}, {"vmax", 9}}, check_dual_identity, validate_g},
        {"trivial1_identity", {{"order", 7}, {"vmax", 9}}, check_trivial1_identity, validate_g},
        {"h_formulas", {{"order", 6}, {"wlo", -8}, {"whi", 8}}, check_h_formulas, validate_h},
        {"lemma_diag",
         {{"order", 6}, {"ylo", -6}, {"yhi", 6}, {"vlo", -8}, {"vhi", 14}, {"widen", 2}},
         check_lemma_diag, validate_lemma},
        {"involutions", {{"n", 10}}, check_involutions, validate_dyck_n},
        {"weak_exc_shift", {{"n", 9}}, check_weak_exc_shift, validate_perm_n},
        {"negative_control", {{"order", 3}}, check_negative_control, validate_order_enum},
    };
    return table;
}

}  // namespace

std::string to_json(const CheckReport& report) {
    nlohmann::json j;
    j["check_id"] = report.check_id;
    j["params"] = report.params;
    j["verdict"] = report.pass ? "pass" : "fail";
    j["detail"] = report.detail;
    j["counterexample"] = report.pass ? nlohmann::json() : nlohmann::json(report.detail);
    j["seconds"] = report.seconds;
    return j.dump(2);
}

const std::vector<std::string>& check_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const CheckSpec& s : specs()) v.push_back(s.id);
        return v;
    }();
    return ids;
}

std::map<std::string, long long> check_defaults(const std::string& check_id) {
    for (const CheckSpec& s : specs())
        if (s.id == check_id) return s.defaults;
    throw std::invalid_argument("unknown check id: " + check_id);
}

CheckReport run_check(const std::string& check_id,
                      const std::map<std::string, long long>& overrides) {
    for (const CheckSpec& s : specs()) {
        if (s.id != check_id) continue;
        Params params = s.defaults;
        for (const auto& [k, v] : overrides) {
            if (params.count(k)) params[k] = v;
        }
        s.validate(params);
        CheckReport report;
        report.check_id = check_id;
        report.params = params;
        const auto start = std::chrono::steady_clock::now();
        report.pass = s.fn(params, report.detail);
        report.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw std::invalid_argument("unknown check id: " + check_id);
}

}  // namespace catstat
