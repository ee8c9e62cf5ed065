#ifndef TWISTKIT_SIMPELL_HPP
#define TWISTKIT_SIMPELL_HPP

// Simultaneous Pell systems a X^2 - b Y^2 = d, b Y^2 - c Z^2 = d, their lift
// to integral points on E_{abcd}, and the quartic reduction
// A^2 X^4 - B Y^2 = C^2 -> a pair of Pell-type equations.

#include <optional>
#include <vector>

#include "twistkit/curve.hpp"

namespace twistkit {

struct SimPellInstance {
    BigInt a, b, c, d;

    SimPellInstance(BigInt a_, BigInt b_, BigInt c_, BigInt d_);

    BigInt curve_d() const { return a * b * c * d; }
};

struct SimPellSolution {
    BigInt x, y, z;  // positive; a x^2 - b y^2 = d and b y^2 - c z^2 = d
};

// All solutions with X, Y, Z <= limit, by iterating the shared variable Y
// and square-testing both sides.  Ordered by Y.
std::vector<SimPellSolution> brute_count(const SimPellInstance& inst, const BigInt& limit);

// The lift (ac (bY)^2, (abc)^2 XYZ) on E_{abcd}.  Verifies the solution, the
// curve equation, the split x -+ D = ab(cZ)^2 / bc(aX)^2 and the descent
// image (squarefree parts of ab, ac, bc).
CurvePoint curve_lift(const SimPellInstance& inst, const SimPellSolution& sol);

// Count bound: 15 + 1.89^{r + 19 r^{1/3}} when the rank r is known, else the
// omega-form 15 + 3.58^{w + 12 w^{1/3}} with w = omega(abcd).
double solution_bound(const SimPellInstance& inst, std::optional<int> rank = std::nullopt);

struct QuarticReduction {
    BigInt g;        // gcd(X, C)
    BigInt lhs_minus, lhs_plus;  // A g (X/g)^2 -+ C/g
    BigInt b1, y1;   // lhs_minus = B1 Y1^2, B1 squarefree
    BigInt b2, y2;   // lhs_plus  = B2 Y2^2, B2 squarefree
    int b_multiplier = 1;  // B1 B2 = multiplier * B, either 1 or 4
    std::optional<SimPellInstance> induced;  // (B2, Ag, B1, C/g) when pairwise coprime
};

// Reduction of a solution of A^2 X^4 - B Y^2 = C^2 (A, B, C pairwise coprime
// squarefree positive) to the pair of equations
//   A g (X/g)^2 - C/g = B1 Y1^2,   A g (X/g)^2 + C/g = B2 Y2^2,
// with B1 B2 = B or 4B; everything verified exactly.
std::vector<QuarticReduction> quartic_reduce(const BigInt& a, const BigInt& b, const BigInt& c,
                                             const BigInt& x, const BigInt& y);

}  // namespace twistkit

#endif
