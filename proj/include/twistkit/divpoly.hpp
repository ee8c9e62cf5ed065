#ifndef TWISTKIT_DIVPOLY_HPP
#define TWISTKIT_DIVPOLY_HPP

// Division polynomials psi_m of y^2 = x^3 - D^2 x, evaluated exactly at a
// point, plus the multiple-coordinate formula x(mP) = phi_m / psi_m^2 and
// the size filters that rule out integral small multiples.

#include <vector>

#include "twistkit/curve.hpp"

namespace twistkit {

struct DivPolyValue {
    long m = 0;
    BigRat value;      // psi_m(P); for even m this includes the factor 2y once
    bool even = false;
};

// psi_m(P) for an affine point, by the doubling recurrences
//   psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
//   psi_{2m}   = (psi_m / 2y)(psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
// with psi_1 = 1, psi_2 = 2y, psi_3 = 3x^4 - 6 D^2 x^2 - D^4,
// psi_4 = 4y (x^6 - 5 D^2 x^4 - 5 D^4 x^2 + D^6), memoized per call.
// Throws for even m at a 2-torsion point (y = 0).
DivPolyValue psi_value(long m, const CurvePoint& p);

// x(mP) = phi_m(P) / psi_m(P)^2 with phi_m = x psi_m^2 - psi_{m+1} psi_{m-1},
// computed exactly.  Throws when mP is the point at infinity.
BigRat x_of_multiple(long m, const CurvePoint& p);

inline constexpr double kDefaultDivpolyC2 = 2.17;  // just above 3/(2 log 2)

// Certified check of the lower bound
//   psi_m(x) > (1 - exp(C2 (log m)^2) (D/x)^2) * m * x^{(m^2-1)/2}
// for x > D and C2 > 3/(2 log 2) with C2 (log m)^2 < 2(log x - log D).
// The left side is exact (squared through y for even m); the right side is
// evaluated in directed-rounding interval arithmetic.  x need not be the
// coordinate of a rational point.
bool divpoly_lower_bound_check(long m, const BigRat& x, const Curve& c, double c2 = kDefaultDivpolyC2);
bool divpoly_lower_bound_check(long m, const CurvePoint& p, double c2 = kDefaultDivpolyC2);

struct MultipleVerdict {
    long m = 0;
    bool excluded_by_bound = false;  // psi_m(x)^4 > (2D)^{3 m^2} exactly
    bool integral = false;           // x(mP) has denominator 1
};

// For each odd 3 <= m <= m_max on an integral point with x > D: "excluded"
// when the exact psi size bound already rules out an integral mP, always
// resolved unconditionally by the exact integrality of x(mP).
std::vector<MultipleVerdict> small_multiple_filter(const CurvePoint& p, long m_max);

}  // namespace twistkit

#endif
