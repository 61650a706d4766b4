#pragma once

#include "heckeaf/exactnum/polynomial.hpp"

#include <vector>

namespace heckeaf {

/// Closed interval [lo, hi] with rational endpoints; lo == hi is allowed.
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator*(const Rational& c, const RationalInterval& a);
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Evaluates p on every point of x (Horner form, so the result encloses the
/// true range but may overestimate it).
RationalInterval eval_interval(const std::vector<Rational>& coeffs, const RationalInterval& x);

/// Isolating interval (lo, hi) for a real root of a squarefree polynomial.
/// The polynomial is non-zero with opposite signs at lo and hi and has no
/// other root in [lo, hi].
struct RealRootInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    RationalInterval as_interval() const { return {lo, hi}; }

    /// One bisection step; the receiver is left untouched.
    RealRootInterval bisect(const Polynomial& p) const;
    /// Bisects until the width drops below eps (eps > 0).
    RealRootInterval refine(const Polynomial& p, const Rational& eps) const;

    friend bool operator==(const RealRootInterval&, const RealRootInterval&) = default;
};

/// Sturm-sequence root isolation. Returns one interval per real root, sorted
/// in increasing order. Throws NotSquarefree.
std::vector<RealRootInterval> isolate_real_roots(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b);
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

}  // namespace heckeaf
