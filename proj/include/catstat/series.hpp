#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catstat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Formal variables of the engine, in canonical order.
/// x marks fixed points / centered tunnels, q excedances / left tunnels,
/// t and z semilength, v and y the reference-line offset, p descents.
enum class Var : int { x = 0, q = 1, t = 2, v = 3, y = 4, z = 5, p = 6 };

inline constexpr int kVarCount = 7;
inline constexpr std::array<char, kVarCount> kVarNames = {'x', 'q', 't', 'v', 'y', 'z', 'p'};

/// Saturating "infinity" for exponent bounds.
inline constexpr int kExpInf = 1 << 24;

int sat_add(int a, int b);
int sat_mul_scalar(int k, int a);  // k finite, a possibly +-kExpInf

/// Exponent vector over the seven variables.  t and z exponents are
/// always >= 0; q, v, y may be negative.
struct Monomial {
    std::array<int, kVarCount> e{};

    int operator[](Var var) const { return e[static_cast<size_t>(var)]; }
    int& operator[](Var var) { return e[static_cast<size_t>(var)]; }

    /// The grading degree: t-exponent + z-exponent.
    int grade() const { return (*this)[Var::t] + (*this)[Var::z]; }

    Monomial operator*(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;

    std::string str() const;
};

Monomial mono(std::initializer_list<std::pair<Var, int>> exps);

struct Interval {
    int lo = -kExpInf;
    int hi = kExpInf;

    bool contains(int value) const { return lo <= value && value <= hi; }
    bool contains(const Interval& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }
    bool empty() const { return lo > hi; }
    Interval intersect(const Interval& o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
    bool operator==(const Interval&) const = default;
};

/// Exactness region of a Series: stored coefficients equal the true
/// coefficients for every monomial inside the window box.  Outside it a
/// series makes no claim.  t- and z-bands have lower bound 0; their upper
/// bounds are the truncation orders.
struct Window {
    std::array<Interval, kVarCount> bands;

    Window();  // full everywhere except t,z in [0,0]

    static Window order(int tmax);                // truncate in t
    static Window zorder(int zmax);               // truncate in z
    Window& band(Var var, int lo, int hi);
    Window& band(Var var, Interval iv);

    const Interval& operator[](Var var) const { return bands[static_cast<size_t>(var)]; }
    Interval& operator[](Var var) { return bands[static_cast<size_t>(var)]; }

    bool contains(const Monomial& m) const;
    Window intersect(const Window& o) const;
    /// Widens every finite v/y bound outward by `amount` (for the
    /// window-stability re-runs).
    Window widened(Var var, int amount) const;
    bool operator==(const Window&) const = default;

    std::string str() const;
};

/// One-sided bound on an exponent, affine in the grading degree g:
/// value >= c + s*g (lower) or value <= c + s*g (upper).  c = +-kExpInf
/// saturates to an unconditional bound.
struct AffineBound {
    int c = 0;
    int s = 0;

    int at(int g) const;
    bool operator==(const AffineBound&) const = default;
};

/// Certified bounds on the support of the *true* (untruncated) series:
/// every true term satisfies lo[V] <= exponent(V) <= hi[V] at its grade.
/// Constructors compute these; with_support_floor/ceiling tighten them on
/// the builder's authority (stored terms are verified, terms beyond the
/// window are trusted and corroborated by the oracle comparisons).
struct Support {
    std::array<AffineBound, kVarCount> lo;
    std::array<AffineBound, kVarCount> hi;

    Support();  // x,p,t,z >= 0; t,z <= g; everything else unbounded

    Interval band(Var var, int g) const;
    /// Bounds valid at every grade (slope-aware: +-inf where a slope
    /// makes the bound grade-dependent in the unbounded direction).
    Interval global(Var var) const;
    bool operator==(const Support&) const = default;
};

/// Sparse truncated Laurent series with exact rational coefficients.
///
/// Immutable; every operation returns a new value.  Arithmetic tracks the
/// exactness window and the support certificate so that a product is only
/// claimed exact where every contribution from the true operands is
/// certified to have been stored.
class Series {
public:
    using Terms = std::map<Monomial, Rat>;

    Series() = default;

    static Series zero(Window w);
    static Series constant(Rat value, Window w);
    /// Exact finite polynomial; window is full with t/z capped at the
    /// actual degree, support is the bounding box of the terms.
    static Series polynomial(const std::vector<std::pair<Monomial, Rat>>& terms);
    /// Directed geometric expansion of 1/(1-var):
    ///   positive:  sum of var^k for 0 <= k <= hi
    ///   negative: -(sum of var^k for lo <= k <= -1)
    static Series geometric(Var var, Interval band, bool positive_direction);

    const Terms& terms() const { return terms_; }
    const Window& window() const { return window_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return terms_.empty(); }

    /// Declared window widened to infinity on any side where the support
    /// certificate pins all true terms inside the window anyway.
    Interval effective_band(Var var, int g) const;
    Interval effective_global(Var var) const;

    /// Stored coefficient; throws std::out_of_range outside the window
    /// (distinguishing an exact zero from an unknown).
    Rat coefficient(const Monomial& m) const;

    Series truncated(const Window& w) const;
    Series scaled(const Rat& factor) const;
    /// Exact multiplication by coeff * m where m may carry negative
    /// exponents; x/t/z/p exponents must stay nonnegative (checked on
    /// stored terms, floors raised accordingly).
    Series shifted(const Monomial& m, const Rat& coeff = Rat(1)) const;

    Series with_support_floor(Var var, AffineBound bound) const;
    Series with_support_ceiling(Var var, AffineBound bound) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;

    /// Internal constructor for the engine's own use; validates that the
    /// stored terms respect window and support.
    Series(Terms terms, Window window, Support support);

private:
    Terms terms_;
    Window window_;
    Support support_;
};

/// Multiplicative inverse of a series whose constant term is a nonzero
/// rational and whose grade-0 part is invertible inside the target
/// window; computed grade by grade in the box ring.
Series invert_unit(const Series& a, const Window& target);

/// Square root with constant term 1; grade-0 part must be exactly 1.
Series sqrt_unit(const Series& a, const Window& target);

/// Simultaneous monomial substitution: each variable maps to
/// coeff * (product of variables with integer exponents).  The induced
/// exponent map must be unimodular and preserve the t+z grading; images
/// of t and z must have t+z degree exactly 1.  The target window is
/// certified against the operand's window before any term is transformed.
struct SubstImage {
    Rat coeff = Rat(1);
    Monomial exponents;
};
using SubstMap = std::map<Var, SubstImage>;

Series substitute(const Series& a, const SubstMap& map, const Window& target);

/// Eliminates a variable by setting it to 0 or 1 exactly.
Series set_value(const Series& a, Var var, int value);

/// diag: the z^n coefficient of the result is the v^n t^n coefficient of
/// the input (variables configurable).
Series diagonal(const Series& a, Var v_var, Var t_var, Var out_var);

struct SeriesMismatch {
    Monomial monomial;
    Rat lhs;
    Rat rhs;
};

/// First (lexicographically smallest) differing coefficient of a and b on
/// `required`, which both effective windows must cover.
std::optional<SeriesMismatch> first_difference(const Series& a, const Series& b,
                                               const Window& required);

/// Canonical text form: a window header plus one term per line, sorted
/// lexicographically by exponent vector.
std::string canonical_text(const Series& s);

std::string rat_str(const Rat& r);
Rat rat_pow(const Rat& base, int exp);

}  // namespace catstat
