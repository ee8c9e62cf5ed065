#ifndef TWISTKIT_PELL_HPP
#define TWISTKIT_PELL_HPP

// Continued-fraction Pell solvers and the classification of integral points
// in the cosets of the torsion points.

#include <optional>
#include <string>
#include <vector>

#include "twistkit/curve.hpp"

namespace twistkit {

struct PellFundamental {
    BigInt d;
    BigInt v, u;  // minimal positive solution of v^2 - d u^2 = 1
};

// Fundamental solution via the continued-fraction expansion of sqrt(d).
// Throws for perfect-square d.
PellFundamental pell_fundamental(const BigInt& d);

struct DoublePellSolution {
    BigInt s, u, v;  // s^2 - 1 = 2 D u^2 and s^2 + 1 = 2 v^2
};

// The system s^2 - 1 = 2 D u^2, s^2 + 1 = 2 v^2.  The only candidate comes
// from the fundamental solution (v, u) of v^2 - D u^2 = 1 as s^2 = 2v^2 - 1;
// the solution exists iff that value is a perfect square, and is then unique.
std::optional<DoublePellSolution> solve_double_pell(const BigInt& d);

// Complete search for double-Pell solutions with s in the family
//   s_k = ((1 + sqrt 2)^k + (1 - sqrt 2)^k) / 2,  k odd,
// which exhausts all s with s^2 + 1 = 2 v^2.  Independent of the
// continued-fraction route; used as its oracle and to close the one
// documented uniqueness edge case (D = 1785) by bounded search.
std::vector<DoublePellSolution> double_pell_family_search(const BigInt& d, int k_max);

// The only possible non-torsion integral pair in the coset of (D, 0):
// x = D s^2 = (2v^2 - 1) D when the double-Pell system is solvable.
// The point is verified on-curve and in the right coset before returning.
std::optional<CurvePoint> ptors_extra(const BigInt& d);

struct TorsionCosetAudit {
    BigInt d;
    BigInt x_max;
    bool ok = true;
    std::vector<std::string> violations;
    std::optional<BigInt> extra_pair_x;      // found by enumeration
    std::optional<BigInt> predicted_extra_x; // from the Pell route
};

// Scans the integral points up to x_max and checks, against the enumeration:
//  - no non-torsion integral point has the descent image of O, (0,0) or (-D,0);
//  - the coset of (D,0) holds at most one non-torsion pair, and when present
//    its x equals the Pell prediction.
// Violations are reported, not thrown.
TorsionCosetAudit torsion_coset_audit(const BigInt& d, const BigInt& x_max);

}  // namespace twistkit

#endif
