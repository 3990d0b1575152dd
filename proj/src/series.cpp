#include "catstat/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catstat {

namespace {

int clamp_exp(long long v) {
    if (v >= kExpInf) return kExpInf;
    if (v <= -kExpInf) return -kExpInf;
    return static_cast<int>(v);
}

bool is_pos_inf(int v) { return v >= kExpInf; }
bool is_neg_inf(int v) { return v <= -kExpInf; }

Var var_of(size_t i) { return static_cast<Var>(static_cast<int>(i)); }

}  // namespace

int sat_add(int a, int b) {
    if (is_pos_inf(a) || is_pos_inf(b)) {
        if (is_neg_inf(a) || is_neg_inf(b)) throw std::logic_error("inf - inf in exponent bound");
        return kExpInf;
    }
    if (is_neg_inf(a) || is_neg_inf(b)) return -kExpInf;
    return clamp_exp(static_cast<long long>(a) + b);
}

int sat_mul_scalar(int k, int a) {
    if (k == 0) return 0;
    if (is_pos_inf(a)) return k > 0 ? kExpInf : -kExpInf;
    if (is_neg_inf(a)) return k > 0 ? -kExpInf : kExpInf;
    return clamp_exp(static_cast<long long>(k) * a);
}

int AffineBound::at(int g) const {
    if (is_pos_inf(c)) return kExpInf;
    if (is_neg_inf(c)) return -kExpInf;
    return clamp_exp(static_cast<long long>(c) + static_cast<long long>(s) * g);
}

namespace {

// Sum of two bounds of the same sense; slope saturates with the constant.
AffineBound aff_add(const AffineBound& a, const AffineBound& b) {
    const int c = sat_add(a.c, b.c);
    if (is_pos_inf(c) || is_neg_inf(c)) return {c, 0};
    return {c, a.s + b.s};
}

// Weakest common lower bound of two lower bounds.
AffineBound aff_lo_combine(const AffineBound& a, const AffineBound& b) {
    return {std::min(a.c, b.c), std::min(a.s, b.s)};
}

// Weakest common upper bound of two upper bounds.
AffineBound aff_hi_combine(const AffineBound& a, const AffineBound& b) {
    return {std::max(a.c, b.c), std::max(a.s, b.s)};
}

AffineBound aff_lo_mul(const AffineBound& alo, const AffineBound& blo) {
    const int c = sat_add(alo.c, blo.c);
    if (is_pos_inf(c) || is_neg_inf(c)) return {c, 0};
    return {c, std::min(alo.s, blo.s)};
}

AffineBound aff_hi_mul(const AffineBound& ahi, const AffineBound& bhi) {
    const int c = sat_add(ahi.c, bhi.c);
    if (is_pos_inf(c) || is_neg_inf(c)) return {c, 0};
    return {c, std::max(ahi.s, bhi.s)};
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m = *this;
    for (size_t i = 0; i < kVarCount; ++i) m.e[i] += o.e[i];
    return m;
}

std::string Monomial::str() const {
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < kVarCount; ++i) {
        if (e[i] == 0) continue;
        if (any) out << ' ';
        out << kVarNames[i] << '^' << e[i];
        any = true;
    }
    return any ? out.str() : "1";
}

Monomial mono(std::initializer_list<std::pair<Var, int>> exps) {
    Monomial m;
    for (const auto& [var, exp] : exps) m[var] += exp;
    return m;
}

Window::Window() {
    bands[static_cast<size_t>(Var::t)] = {0, 0};
    bands[static_cast<size_t>(Var::z)] = {0, 0};
}

Window Window::order(int tmax) {
    Window w;
    w[Var::t] = {0, tmax};
    return w;
}

Window Window::zorder(int zmax) {
    Window w;
    w[Var::z] = {0, zmax};
    return w;
}

Window& Window::band(Var var, int lo, int hi) {
    (*this)[var] = {lo, hi};
    return *this;
}

Window& Window::band(Var var, Interval iv) {
    (*this)[var] = iv;
    return *this;
}

bool Window::contains(const Monomial& m) const {
    for (size_t i = 0; i < kVarCount; ++i)
        if (!bands[i].contains(m.e[i])) return false;
    return true;
}

Window Window::intersect(const Window& o) const {
    Window w = *this;
    for (size_t i = 0; i < kVarCount; ++i) w.bands[i] = w.bands[i].intersect(o.bands[i]);
    return w;
}

Window Window::widened(Var var, int amount) const {
    Window w = *this;
    Interval& b = w[var];
    if (!is_neg_inf(b.lo)) b.lo -= amount;
    if (!is_pos_inf(b.hi)) b.hi += amount;
    return w;
}

std::string Window::str() const {
    std::ostringstream out;
    auto bound = [](int v) {
        if (is_pos_inf(v)) return std::string("*");
        if (is_neg_inf(v)) return std::string("-*");
        return std::to_string(v);
    };
    for (size_t i = 0; i < kVarCount; ++i) {
        if (i) out << ' ';
        out << kVarNames[i] << '[' << bound(bands[i].lo) << ".." << bound(bands[i].hi) << ']';
    }
    return out.str();
}

Support::Support() {
    for (size_t i = 0; i < kVarCount; ++i) {
        lo[i] = {-kExpInf, 0};
        hi[i] = {kExpInf, 0};
    }
    for (Var var : {Var::x, Var::p, Var::t, Var::z}) lo[static_cast<size_t>(var)] = {0, 0};
    for (Var var : {Var::t, Var::z}) hi[static_cast<size_t>(var)] = {0, 1};
}

Interval Support::band(Var var, int g) const {
    return {lo[static_cast<size_t>(var)].at(g), hi[static_cast<size_t>(var)].at(g)};
}

Interval Support::global(Var var) const {
    const AffineBound& l = lo[static_cast<size_t>(var)];
    const AffineBound& h = hi[static_cast<size_t>(var)];
    Interval iv;
    iv.lo = (is_neg_inf(l.c) || l.s < 0) ? -kExpInf : l.c;
    iv.hi = (is_pos_inf(h.c) || h.s > 0) ? kExpInf : h.c;
    return iv;
}

namespace {

Support empty_support() {
    Support s;
    for (size_t i = 0; i < kVarCount; ++i) {
        s.lo[i] = {kExpInf, 0};
        s.hi[i] = {-kExpInf, 0};
    }
    return s;
}

Support tight_support(const Series::Terms& terms) {
    if (terms.empty()) return empty_support();
    Support s;
    for (size_t i = 0; i < kVarCount; ++i) {
        int mn = kExpInf, mx = -kExpInf;
        for (const auto& [m, c] : terms) {
            mn = std::min(mn, m.e[i]);
            mx = std::max(mx, m.e[i]);
        }
        s.lo[i] = {mn, 0};
        s.hi[i] = {mx, 0};
    }
    return s;
}

}  // namespace

Series::Series(Terms terms, Window window, Support support)
    : terms_(std::move(terms)), window_(window), support_(support) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
            continue;
        }
        const Monomial& m = it->first;
        if (m[Var::x] < 0 || m[Var::t] < 0 || m[Var::z] < 0 || m[Var::p] < 0)
            throw std::domain_error("negative exponent of a non-Laurent variable in " + m.str());
        if (!window_.contains(m))
            throw std::logic_error("stored term outside window: " + m.str());
        for (size_t i = 0; i < kVarCount; ++i)
            if (!support_.band(var_of(i), m.grade()).contains(m.e[i]))
                throw std::logic_error("stored term outside support certificate: " + m.str());
        ++it;
    }
}

Series Series::zero(Window w) { return Series({}, w, empty_support()); }

Series Series::constant(Rat value, Window w) {
    if (value == 0) return zero(w);
    Terms t;
    t.emplace(Monomial{}, std::move(value));
    Support s;
    for (size_t i = 0; i < kVarCount; ++i) {
        s.lo[i] = {0, 0};
        s.hi[i] = {0, 0};
    }
    return Series(std::move(t), w, s);
}

Series Series::polynomial(const std::vector<std::pair<Monomial, Rat>>& term_list) {
    Terms t;
    for (const auto& [m, c] : term_list) t[m] += c;
    for (auto it = t.begin(); it != t.end();)
        it = (it->second == 0) ? t.erase(it) : std::next(it);
    Window w;
    int tmax = 0, zmax = 0;
    for (const auto& [m, c] : t) {
        tmax = std::max(tmax, m[Var::t]);
        zmax = std::max(zmax, m[Var::z]);
    }
    w[Var::t] = {0, tmax};
    w[Var::z] = {0, zmax};
    for (Var var : {Var::x, Var::q, Var::v, Var::y, Var::p}) w[var] = {-kExpInf, kExpInf};
    Support s = tight_support(t);
    return Series(std::move(t), w, s);
}

Series Series::geometric(Var var, Interval band, bool positive_direction) {
    Terms terms;
    Support s;
    for (size_t i = 0; i < kVarCount; ++i) {
        s.lo[i] = {0, 0};
        s.hi[i] = {0, 0};
    }
    if (positive_direction) {
        if (is_pos_inf(band.hi))
            throw std::invalid_argument("geometric series needs a finite upper window bound");
        for (int k = std::max(0, band.lo); k <= band.hi; ++k) terms[mono({{var, k}})] = 1;
        s.lo[static_cast<size_t>(var)] = {0, 0};
        s.hi[static_cast<size_t>(var)] = {kExpInf, 0};
    } else {
        if (is_neg_inf(band.lo))
            throw std::invalid_argument("geometric series needs a finite lower window bound");
        for (int k = band.lo; k <= std::min(-1, band.hi); ++k) terms[mono({{var, k}})] = -1;
        s.lo[static_cast<size_t>(var)] = {-kExpInf, 0};
        s.hi[static_cast<size_t>(var)] = {-1, 0};
    }
    Window w;
    w[var] = band;
    for (Var other : {Var::x, Var::q, Var::v, Var::y, Var::p})
        if (other != var) w[other] = {-kExpInf, kExpInf};
    return Series(std::move(terms), w, s);
}

Interval Series::effective_band(Var var, int g) const {
    Interval w = window_[var];
    const Interval sup = support_.band(var, g);
    if (sup.empty()) return {-kExpInf, kExpInf};
    if (sup.lo >= w.lo) w.lo = -kExpInf;
    if (sup.hi <= w.hi) w.hi = kExpInf;
    return w;
}

Interval Series::effective_global(Var var) const {
    Interval w = window_[var];
    const Interval sup = support_.global(var);
    if (sup.empty()) return {-kExpInf, kExpInf};
    if (sup.lo >= w.lo) w.lo = -kExpInf;
    if (sup.hi <= w.hi) w.hi = kExpInf;
    return w;
}

Rat Series::coefficient(const Monomial& m) const {
    const int g = m.grade();
    for (size_t i = 0; i < kVarCount; ++i)
        if (!effective_band(var_of(i), g).contains(m.e[i]))
            throw std::out_of_range("coefficient outside exactness window: " + m.str());
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Series Series::truncated(const Window& w) const {
    const Window nw = window_.intersect(w);
    Terms t;
    for (const auto& [m, c] : terms_)
        if (nw.contains(m)) t.emplace(m, c);
    return Series(std::move(t), nw, support_);
}

Series Series::scaled(const Rat& factor) const {
    if (factor == 0) return zero(window_);
    Terms t = terms_;
    for (auto& [m, c] : t) c *= factor;
    return Series(std::move(t), window_, support_);
}

Series Series::shifted(const Monomial& shift, const Rat& coeff) const {
    if (coeff == 0) throw std::invalid_argument("shift coefficient must be nonzero");
    Terms t;
    for (const auto& [m, c] : terms_) {
        const Monomial nm = m * shift;
        for (Var var : {Var::x, Var::t, Var::z, Var::p})
            if (nm[var] < 0)
                throw std::domain_error("monomial shift would create a negative " +
                                        std::string(1, kVarNames[static_cast<size_t>(var)]) +
                                        " exponent");
        t.emplace(nm, c * coeff);
    }
    Window w = window_;
    Support s = support_;
    // A bound c + s*g refers to the term's own grade, so shifting by a
    // monomial of grade dg turns it into (c + d - s*dg) + s*g'.
    const int dg = shift.grade();
    for (size_t i = 0; i < kVarCount; ++i) {
        const int d = shift.e[i];
        Interval& b = w.bands[i];
        if (d != 0) {
            if (!is_neg_inf(b.lo)) b.lo += d;
            if (!is_pos_inf(b.hi)) b.hi += d;
        }
        auto adjust = [&](AffineBound& bound) {
            if (!is_pos_inf(bound.c) && !is_neg_inf(bound.c)) bound.c += d - bound.s * dg;
        };
        adjust(s.lo[i]);
        adjust(s.hi[i]);
    }
    // Legality of x/t/z/p exponents is the caller's divisibility claim;
    // checked on stored terms above, asserted beyond the window.
    for (Var var : {Var::x, Var::t, Var::z, Var::p}) {
        const size_t i = static_cast<size_t>(var);
        if (shift.e[i] >= 0) continue;
        w.bands[i].lo = std::max(w.bands[i].lo, 0);
        if (s.lo[i].s >= 0 && !is_pos_inf(s.lo[i].c)) s.lo[i].c = std::max(s.lo[i].c, 0);
    }
    return Series(std::move(t), w, s);
}

Series Series::with_support_floor(Var var, AffineBound bound) const {
    for (const auto& [m, c] : terms_)
        if (m[var] < bound.at(m.grade()))
            throw std::logic_error("support floor assertion violated by stored term " + m.str());
    Support s = support_;
    s.lo[static_cast<size_t>(var)] = bound;
    return Series(terms_, window_, s);
}

Series Series::with_support_ceiling(Var var, AffineBound bound) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > bound.at(m.grade()))
            throw std::logic_error("support ceiling assertion violated by stored term " + m.str());
    Support s = support_;
    s.hi[static_cast<size_t>(var)] = bound;
    return Series(terms_, window_, s);
}

Series Series::operator-() const {
    Terms t = terms_;
    for (auto& [m, c] : t) c = -c;
    return Series(std::move(t), window_, support_);
}

Series operator+(const Series& a, const Series& b) {
    Window w;
    for (size_t i = 0; i < kVarCount; ++i) {
        const Var var = var_of(i);
        w.bands[i] = a.effective_global(var).intersect(b.effective_global(var));
        if (var == Var::t || var == Var::z) w.bands[i].lo = 0;
    }
    Support s;
    for (size_t i = 0; i < kVarCount; ++i) {
        s.lo[i] = aff_lo_combine(a.support_.lo[i], b.support_.lo[i]);
        s.hi[i] = aff_hi_combine(a.support_.hi[i], b.support_.hi[i]);
    }
    Series::Terms t = a.terms_;
    for (const auto& [m, c] : b.terms_) t[m] += c;
    for (auto it = t.begin(); it != t.end();)
        it = (!w.contains(it->first)) ? t.erase(it) : std::next(it);
    return Series(std::move(t), w, s);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    Window w;
    // Grading windows: exact up to the smaller truncation order of the
    // factors; two genuinely polynomial factors bound the product by the
    // sum of their degrees.
    for (Var var : {Var::t, Var::z}) {
        int hi = std::min(a.effective_global(var).hi, b.effective_global(var).hi);
        if (is_pos_inf(hi)) {
            const Interval sa = a.support().global(var), sb = b.support().global(var);
            hi = sat_add(std::max(sa.hi, 0), std::max(sb.hi, 0));
        }
        if (is_pos_inf(hi))
            throw std::domain_error("product has unbounded grading; truncate an operand first");
        w[var] = {0, hi};
    }
    const int gmax = w[Var::t].hi + w[Var::z].hi;

    for (Var var : {Var::x, Var::q, Var::v, Var::y, Var::p}) {
        long long hi_cand = kExpInf, lo_cand = -kExpInf;
        int sup_hi = -kExpInf, sup_lo = kExpInf;
        bool any = false;
        for (int g1 = 0; g1 <= gmax; ++g1) {
            const Interval sa = a.support().band(var, g1);
            if (sa.empty()) continue;
            const Interval ea = a.effective_band(var, g1);
            for (int g2 = 0; g2 + g1 <= gmax; ++g2) {
                const Interval sb = b.support().band(var, g2);
                if (sb.empty()) continue;
                any = true;
                if ((is_neg_inf(sa.lo) && is_pos_inf(sb.hi)) ||
                    (is_neg_inf(sb.lo) && is_pos_inf(sa.hi)))
                    throw std::domain_error(
                        std::string("cannot certify finitely many contributions in ") +
                        kVarNames[static_cast<size_t>(var)] +
                        "; operand lacks a support bound");
                const Interval eb = b.effective_band(var, g2);
                if (sa.hi > ea.hi) hi_cand = std::min(hi_cand, static_cast<long long>(ea.hi) + sb.lo);
                if (sa.lo < ea.lo) lo_cand = std::max(lo_cand, static_cast<long long>(ea.lo) + sb.hi);
                if (sb.hi > eb.hi) hi_cand = std::min(hi_cand, static_cast<long long>(eb.hi) + sa.lo);
                if (sb.lo < eb.lo) lo_cand = std::max(lo_cand, static_cast<long long>(eb.lo) + sa.hi);
                sup_hi = std::max(sup_hi, sat_add(sa.hi, sb.hi));
                sup_lo = std::min(sup_lo, sat_add(sa.lo, sb.lo));
            }
        }
        if (!any) {
            w[var] = {-kExpInf, kExpInf};
            continue;
        }
        if (hi_cand >= sup_hi) hi_cand = kExpInf;
        if (lo_cand <= sup_lo) lo_cand = -kExpInf;
        w[var] = {clamp_exp(lo_cand), clamp_exp(hi_cand)};
    }

    Support s;
    for (size_t i = 0; i < kVarCount; ++i) {
        s.lo[i] = aff_lo_mul(a.support_.lo[i], b.support_.lo[i]);
        s.hi[i] = aff_hi_mul(a.support_.hi[i], b.support_.hi[i]);
    }

    Series::Terms t;
    const int thi = w[Var::t].hi, zhi = w[Var::z].hi;
    for (const auto& [ma, ca] : a.terms_) {
        if (ma[Var::t] > thi || ma[Var::z] > zhi) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (ma[Var::t] + mb[Var::t] > thi || ma[Var::z] + mb[Var::z] > zhi) continue;
            const Monomial m = ma * mb;
            if (!w.contains(m)) continue;
            t[m] += ca * cb;
        }
    }
    return Series(std::move(t), w, s);
}

namespace {

// Box used by the grade-by-grade quotient-ring algorithms: all exponents
// nonnegative, v/y/t/z capped by the target window.
struct Box {
    int thi, zhi, vhi, yhi;

    bool contains(const Monomial& m) const {
        for (size_t i = 0; i < kVarCount; ++i)
            if (m.e[i] < 0) return false;
        return m[Var::t] <= thi && m[Var::z] <= zhi && m[Var::v] <= vhi && m[Var::y] <= yhi;
    }
};

using SliceTerms = std::map<Monomial, Rat>;

void conv_into(SliceTerms& acc, const SliceTerms& a, const SliceTerms& b, const Box& box,
               const Rat& factor) {
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            const Monomial m = ma * mb;
            if (!box.contains(m)) continue;
            acc[m] += ca * cb * factor;
        }
}

void prune(SliceTerms& t) {
    for (auto it = t.begin(); it != t.end();)
        it = (it->second == 0) ? t.erase(it) : std::next(it);
}

// Common validation for the box-ring algorithms; returns the box and the
// grade slices of `a` restricted to it.
Box prepare_box(const Series& a, const Window& target, std::vector<SliceTerms>& slices,
                const char* op_name) {
    Box box{target[Var::t].hi, target[Var::z].hi, target[Var::v].hi, target[Var::y].hi};
    if (is_pos_inf(box.thi) || is_pos_inf(box.zhi) || box.thi < 0 || box.zhi < 0)
        throw std::invalid_argument(std::string(op_name) + " needs finite t/z truncation orders");
    for (Var var : {Var::x, Var::q, Var::v, Var::y, Var::p}) {
        const Interval sup = a.support().global(var);
        if (!sup.empty() && sup.lo < 0)
            throw std::domain_error(std::string(op_name) + ": operand has negative " +
                                    kVarNames[static_cast<size_t>(var)] + " exponents");
    }
    const int gmax = box.thi + box.zhi;
    for (Var var : {Var::v, Var::y}) {
        int need = 0;
        for (int g = 0; g <= gmax; ++g) {
            const Interval band = a.support().band(var, g);
            if (!band.empty()) need = std::max(need, band.hi);
        }
        int& cap = (var == Var::v) ? box.vhi : box.yhi;
        if (need > 0 && is_pos_inf(cap))
            throw std::invalid_argument(std::string(op_name) + " needs a finite " +
                                        kVarNames[static_cast<size_t>(var)] + " window");
        if (is_pos_inf(cap)) cap = 0;
        cap = std::max(cap, 0);
    }
    // The operand must be exact on the whole box.
    for (size_t i = 0; i < kVarCount; ++i) {
        const Var var = var_of(i);
        const Interval eff = a.effective_global(var);
        Interval needed{0, 0};
        if (var == Var::t) needed = {0, box.thi};
        else if (var == Var::z) needed = {0, box.zhi};
        else if (var == Var::v) needed = {0, box.vhi};
        else if (var == Var::y) needed = {0, box.yhi};
        else {
            const Interval sup = a.support().global(var);
            if (!eff.contains(sup))
                throw std::domain_error(std::string(op_name) + ": operand window does not cover its " +
                                        kVarNames[i] + " support");
            continue;
        }
        if (!eff.contains(needed))
            throw std::domain_error(std::string(op_name) + ": operand window too small in " +
                                    kVarNames[i]);
    }
    slices.assign(static_cast<size_t>(gmax + 1), {});
    for (const auto& [m, c] : a.terms())
        if (box.contains(m)) slices[static_cast<size_t>(m.grade())].emplace(m, c);
    return box;
}

Series assemble_box_result(std::vector<SliceTerms> result, const Series& a, const Box& box) {
    Series::Terms terms;
    for (auto& slice : result)
        for (auto& [m, c] : slice)
            if (c != 0) terms.emplace(m, std::move(c));
    Window w;
    w[Var::t] = {0, box.thi};
    w[Var::z] = {0, box.zhi};
    for (Var var : {Var::x, Var::q, Var::p}) w[var] = {-kExpInf, kExpInf};
    w[Var::v] = {-kExpInf, box.vhi};
    w[Var::y] = {-kExpInf, box.yhi};
    Support s;  // universal defaults for t,z,x,p
    for (Var var : {Var::t, Var::z}) {
        // a grading variable absent from the operand stays absent
        if (a.support().global(var).hi <= 0) {
            s.lo[static_cast<size_t>(var)] = {0, 0};
            s.hi[static_cast<size_t>(var)] = {0, 0};
        }
    }
    for (Var var : {Var::x, Var::q, Var::v, Var::y, Var::p}) {
        const size_t i = static_cast<size_t>(var);
        const Interval sup = a.support().global(var);
        if (sup.empty() || (sup.lo >= 0 && sup.hi <= 0)) {
            // variable absent from the operand: absent from the result
            s.lo[i] = {0, 0};
            s.hi[i] = {0, 0};
            w[var] = {-kExpInf, kExpInf};
        } else {
            s.lo[i] = {0, std::min(a.support().lo[i].s, 0)};
            s.hi[i] = {kExpInf, 0};
        }
    }
    return Series(std::move(terms), w, s);
}

}  // namespace

Series invert_unit(const Series& a, const Window& target) {
    std::vector<SliceTerms> A;
    const Box box = prepare_box(a, target, A, "invert_unit");
    const int gmax = box.thi + box.zhi;

    const SliceTerms& A0 = A[0];
    const auto unit_it = A0.find(Monomial{});
    if (unit_it == A0.end() || unit_it->second == 0)
        throw std::invalid_argument("invert_unit: constant term is zero");
    const Rat c0 = unit_it->second;

    SliceTerms reduced;  // (A0 / c0) - 1, negated
    for (const auto& [m, c] : A0) {
        if (m == Monomial{}) continue;
        if (m[Var::v] == 0 && m[Var::y] == 0)
            throw std::domain_error(
                "invert_unit: grade-0 part is not invertible inside finite v/y windows");
        reduced[m] = -c / c0;
    }

    std::vector<SliceTerms> B(static_cast<size_t>(gmax + 1));
    SliceTerms acc, power;
    acc[Monomial{}] = 1;
    power[Monomial{}] = 1;
    const int iter_cap = box.vhi + box.yhi + 2;
    for (int iter = 0; iter < iter_cap && !power.empty(); ++iter) {
        SliceTerms next;
        conv_into(next, power, reduced, box, Rat(1));
        prune(next);
        power = std::move(next);
        for (const auto& [m, c] : power) acc[m] += c;
    }
    if (!power.empty()) throw std::logic_error("invert_unit: grade-0 inversion did not terminate");
    for (auto& [m, c] : acc) c /= c0;
    prune(acc);
    B[0] = std::move(acc);

    for (int g = 1; g <= gmax; ++g) {
        SliceTerms rhs;
        for (int i = 1; i <= g; ++i)
            conv_into(rhs, A[static_cast<size_t>(i)], B[static_cast<size_t>(g - i)], box, Rat(-1));
        prune(rhs);
        SliceTerms bg;
        conv_into(bg, B[0], rhs, box, Rat(1));
        prune(bg);
        B[static_cast<size_t>(g)] = std::move(bg);
    }
    return assemble_box_result(std::move(B), a, box);
}

Series sqrt_unit(const Series& a, const Window& target) {
    std::vector<SliceTerms> A;
    const Box box = prepare_box(a, target, A, "sqrt_unit");
    const int gmax = box.thi + box.zhi;

    if (A[0].size() != 1 || A[0].begin()->first != Monomial{} || A[0].begin()->second != 1)
        throw std::invalid_argument("sqrt_unit: grade-0 part must be exactly 1");

    std::vector<SliceTerms> B(static_cast<size_t>(gmax + 1));
    B[0][Monomial{}] = 1;
    for (int g = 1; g <= gmax; ++g) {
        SliceTerms rhs = A[static_cast<size_t>(g)];
        for (int i = 1; i < g; ++i)
            conv_into(rhs, B[static_cast<size_t>(i)], B[static_cast<size_t>(g - i)], box, Rat(-1));
        prune(rhs);
        for (auto& [m, c] : rhs) c /= 2;
        B[static_cast<size_t>(g)] = std::move(rhs);
    }
    return assemble_box_result(std::move(B), a, box);
}

namespace {

Interval interval_scale(int k, const Interval& iv) {
    if (iv.empty()) return iv;
    if (k >= 0) return {sat_mul_scalar(k, iv.lo), sat_mul_scalar(k, iv.hi)};
    return {sat_mul_scalar(k, iv.hi), sat_mul_scalar(k, iv.lo)};
}

Interval interval_add(const Interval& a, const Interval& b) {
    if (a.empty() || b.empty()) return {1, 0};
    return {sat_add(a.lo, b.lo), sat_add(a.hi, b.hi)};
}

// Exponent matrix of a substitution map and its integral inverse.
struct SubstMatrix {
    std::array<std::array<int, kVarCount>, kVarCount> fwd{};  // fwd[out][in]
    std::array<std::array<int, kVarCount>, kVarCount> inv{};
    std::array<Rat, kVarCount> coeff;
};

SubstMatrix build_matrix(const SubstMap& map) {
    SubstMatrix m;
    for (size_t i = 0; i < kVarCount; ++i) {
        m.fwd[i][i] = 1;
        m.coeff[i] = 1;
    }
    for (const auto& [var, image] : map) {
        const size_t u = static_cast<size_t>(var);
        if (image.coeff == 0) throw std::invalid_argument("substitution image has zero coefficient");
        m.coeff[u] = image.coeff;
        for (size_t o = 0; o < kVarCount; ++o) m.fwd[o][u] = image.exponents.e[o];
    }
    // Images of t and z must carry t+z degree exactly 1; other images none.
    for (size_t u = 0; u < kVarCount; ++u) {
        const int deg = m.fwd[static_cast<size_t>(Var::t)][u] + m.fwd[static_cast<size_t>(Var::z)][u];
        const bool grading = (var_of(u) == Var::t || var_of(u) == Var::z);
        if (deg != (grading ? 1 : 0))
            throw std::invalid_argument("substitution must preserve the t/z grading");
    }
    // Invert over the rationals and require an integer inverse.
    std::array<std::array<Rat, 2 * kVarCount>, kVarCount> aug{};
    for (size_t r = 0; r < kVarCount; ++r) {
        for (size_t c = 0; c < kVarCount; ++c) aug[r][c] = m.fwd[r][c];
        aug[r][kVarCount + r] = 1;
    }
    for (size_t col = 0; col < kVarCount; ++col) {
        size_t pivot = col;
        while (pivot < kVarCount && aug[pivot][col] == 0) ++pivot;
        if (pivot == kVarCount)
            throw std::invalid_argument("substitution map is not invertible on the exponent lattice");
        std::swap(aug[pivot], aug[col]);
        const Rat p = aug[col][col];
        for (size_t c = 0; c < 2 * kVarCount; ++c) aug[col][c] /= p;
        for (size_t r = 0; r < kVarCount; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rat f = aug[r][col];
            for (size_t c = 0; c < 2 * kVarCount; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    for (size_t r = 0; r < kVarCount; ++r)
        for (size_t c = 0; c < kVarCount; ++c) {
            const Rat& val = aug[r][kVarCount + c];
            if (denominator(val) != 1)
                throw std::invalid_argument("substitution map is not unimodular");
            m.inv[r][c] = numerator(val).convert_to<int>();
        }
    return m;
}

}  // namespace

Series substitute(const Series& a, const SubstMap& map, const Window& target) {
    const SubstMatrix mat = build_matrix(map);
    if (is_pos_inf(target[Var::t].hi) || is_pos_inf(target[Var::z].hi))
        throw std::invalid_argument("substitute needs finite t/z truncation orders in the target");
    const int gmax = target[Var::t].hi + target[Var::z].hi;

    // Push the support certificate through the exponent map.
    Support out;
    for (size_t o = 0; o < kVarCount; ++o) {
        AffineBound lo{0, 0}, hi{0, 0};
        for (size_t u = 0; u < kVarCount; ++u) {
            const int k = mat.fwd[o][u];
            if (k == 0) continue;
            const AffineBound& inlo = a.support().lo[u];
            const AffineBound& inhi = a.support().hi[u];
            if (k > 0) {
                lo = aff_add(lo, {sat_mul_scalar(k, inlo.c), k * inlo.s});
                hi = aff_add(hi, {sat_mul_scalar(k, inhi.c), k * inhi.s});
            } else {
                lo = aff_add(lo, {sat_mul_scalar(k, inhi.c), k * inhi.s});
                hi = aff_add(hi, {sat_mul_scalar(k, inlo.c), k * inlo.s});
            }
        }
        out.lo[o] = lo;
        out.hi[o] = hi;
    }

    // Certify the target window: at each grade, every true input term
    // whose image lands in the target must lie inside the input window.
    for (int g = 0; g <= gmax; ++g) {
        std::array<Interval, kVarCount> j{};
        bool empty_grade = false;
        for (size_t o = 0; o < kVarCount; ++o) {
            j[o] = target[var_of(o)].intersect(out.band(var_of(o), g));
            if (j[o].empty()) empty_grade = true;
        }
        if (empty_grade) continue;
        for (size_t u = 0; u < kVarCount; ++u) {
            Interval pre{0, 0};
            for (size_t o = 0; o < kVarCount; ++o)
                pre = interval_add(pre, interval_scale(mat.inv[u][o], j[o]));
            const Interval i = pre.intersect(a.support().band(var_of(u), g));
            if (i.empty()) continue;
            if (!a.effective_band(var_of(u), g).contains(i))
                throw std::domain_error(std::string("substitute: target window not certified; ") +
                                        "operand window too small in " + kVarNames[u]);
        }
    }

    Series::Terms terms;
    for (const auto& [m, c] : a.terms()) {
        Monomial nm;
        for (size_t o = 0; o < kVarCount; ++o) {
            long long e = 0;
            for (size_t u = 0; u < kVarCount; ++u)
                e += static_cast<long long>(mat.fwd[o][u]) * m.e[u];
            nm.e[o] = static_cast<int>(e);
        }
        if (!target.contains(nm)) continue;
        Rat nc = c;
        for (size_t u = 0; u < kVarCount; ++u)
            if (mat.coeff[u] != 1 && m.e[u] != 0) nc *= rat_pow(mat.coeff[u], m.e[u]);
        terms[nm] += nc;
    }
    return Series(std::move(terms), target, out);
}

Series set_value(const Series& a, Var var, int value) {
    const size_t i = static_cast<size_t>(var);
    if (value == 0) {
        const Interval sup = a.support().global(var);
        if (!sup.empty() && sup.lo < 0)
            throw std::domain_error("set_value(0): series has negative exponents of " +
                                    std::string(1, kVarNames[i]));
        if (!a.effective_global(var).contains(0))
            throw std::domain_error("set_value(0): window does not contain exponent 0");
        Series::Terms t;
        for (const auto& [m, c] : a.terms())
            if (m[var] == 0) t.emplace(m, c);
        Window w = a.window();
        w[var] = {-kExpInf, kExpInf};
        Support s = a.support();
        s.lo[i] = {0, 0};
        s.hi[i] = {0, 0};
        return Series(std::move(t), w, s);
    }
    if (value == 1) {
        const int gmax = a.window()[Var::t].hi + a.window()[Var::z].hi;
        if (gmax < 0 || gmax >= kExpInf)
            throw std::invalid_argument("set_value(1) needs finite truncation orders");
        for (int g = 0; g <= gmax; ++g) {
            const Interval band = a.support().band(var, g);
            if (band.empty()) continue;
            if (!a.effective_band(var, g).contains(band))
                throw std::domain_error(
                    "set_value(1): window does not cover the full support of " +
                    std::string(1, kVarNames[i]));
        }
        Series::Terms t;
        for (const auto& [m, c] : a.terms()) {
            Monomial nm = m;
            nm[var] = 0;
            t[nm] += c;
        }
        Window w = a.window();
        w[var] = {-kExpInf, kExpInf};
        Support s = a.support();
        s.lo[i] = {0, 0};
        s.hi[i] = {0, 0};
        return Series(std::move(t), w, s);
    }
    throw std::invalid_argument("set_value supports only the values 0 and 1");
}

Series diagonal(const Series& a, Var v_var, Var t_var, Var out_var) {
    const Interval out_sup = a.support().global(out_var);
    if (!out_sup.empty() && !(out_sup.lo >= 0 && out_sup.hi <= 0))
        throw std::invalid_argument("diagonal: output variable already occurs in the operand");
    const int tcap = a.window()[t_var].hi;
    if (is_pos_inf(tcap)) throw std::invalid_argument("diagonal needs a finite truncation order");
    int zmax = -1;
    for (int tau = 0; tau <= tcap; ++tau) {
        if (!a.effective_band(t_var, tau).contains(tau)) break;
        if (!a.effective_band(v_var, tau).contains(tau)) break;
        zmax = tau;
    }
    Series::Terms t;
    for (const auto& [m, c] : a.terms()) {
        if (m[t_var] != m[v_var] || m[t_var] > zmax) continue;
        Monomial nm = m;
        nm[t_var] = 0;
        nm[v_var] = 0;
        nm[out_var] = m[t_var];
        t.emplace(nm, c);
    }
    Window w = a.window();
    w[out_var] = {0, zmax};
    w[t_var] = (t_var == Var::t || t_var == Var::z) ? Interval{0, 0} : Interval{-kExpInf, kExpInf};
    w[v_var] = {-kExpInf, kExpInf};
    Support s = a.support();
    const auto clear = [&s](Var var) {
        s.lo[static_cast<size_t>(var)] = {0, 0};
        s.hi[static_cast<size_t>(var)] = {0, 0};
    };
    clear(t_var);
    clear(v_var);
    s.lo[static_cast<size_t>(out_var)] = {0, 0};
    s.hi[static_cast<size_t>(out_var)] = {0, 1};
    return Series(std::move(t), w, s);
}

std::optional<SeriesMismatch> first_difference(const Series& a, const Series& b,
                                               const Window& required) {
    for (size_t i = 0; i < kVarCount; ++i) {
        const Var var = var_of(i);
        if (!a.effective_global(var).contains(required[var]))
            throw std::domain_error(std::string("comparison window not covered by left operand in ") +
                                    kVarNames[i]);
        if (!b.effective_global(var).contains(required[var]))
            throw std::domain_error(std::string("comparison window not covered by right operand in ") +
                                    kVarNames[i]);
    }
    auto ia = a.terms().begin(), ib = b.terms().begin();
    const auto ea = a.terms().end(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        while (ia != ea && !required.contains(ia->first)) ++ia;
        while (ib != eb && !required.contains(ib->first)) ++ib;
        if (ia == ea && ib == eb) break;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            return SeriesMismatch{ia->first, ia->second, Rat(0)};
        }
        if (ia == ea || ib->first < ia->first) {
            return SeriesMismatch{ib->first, Rat(0), ib->second};
        }
        if (ia->second != ib->second) return SeriesMismatch{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

std::string canonical_text(const Series& s) {
    std::ostringstream out;
    out << "# window " << s.window().str() << '\n';
    for (const auto& [m, c] : s.terms()) {
        out << rat_str(c);
        if (m != Monomial{}) out << " * " << m.str();
        out << '\n';
    }
    return out.str();
}

std::string rat_str(const Rat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

Rat rat_pow(const Rat& base, int exp) {
    if (exp == 0) return Rat(1);
    if (base == 0) throw std::invalid_argument("zero base with nonzero exponent");
    Rat acc(1);
    const int n = exp < 0 ? -exp : exp;
    for (int i = 0; i < n; ++i) acc *= base;
    return exp < 0 ? Rat(1) / acc : acc;
}

}  // namespace catstat
