#ifndef TWISTKIT_CONSTANTS_AUDIT_HPP
#define TWISTKIT_CONSTANTS_AUDIT_HPP

// Numeric verification of the explicit constant chains: gap/repulsion
// arithmetic, the approximation-exponent expression, the independence
// threshold, the medium/large point budget, and the conditional ceiling.
//
// The near-tie comparisons (margins of a few parts in 10^4) are recomputed
// in exact rational arithmetic: every radical in the expressions can be
// eliminated by squaring, so each verdict reduces to integer comparisons.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/exact.hpp"

namespace twistkit {

enum class Rel { lt, gt, le, ge };

const char* rel_name(Rel r);

struct AuditItem {
    std::string name;
    std::map<std::string, double> inputs;
    double computed = 0.0;
    double threshold = 0.0;
    Rel relation = Rel::lt;
    bool verdict = false;
    bool certified = false;  // confirmed in exact rational arithmetic
};

// ((B + mu) / (sqrt(B^2 - mu) + sqrt(B(1 - mu))))^2 * x for B = X/x,
// mu = D^2/x^2; a lower bound for x(P + R), always above x/4.
double sum_lower_bound(double x, double big_x, double d);

// x(2Q)/x(Q) = (1 + mu^2)^2 / (4(1 - mu^2)) with mu = D/x; >= 1/4.
double double_ratio(double x, double d);

// 8 (1 - 63 lambda - 418 delta) / ((1 + sqrt(lambda))^2 (1 + delta) + 16 delta).
double roth_exponent(double lambda, double delta);

// (c - 4 sqrt(m/M))^{-1} (1 + (c^{-2} + 1)/M) sqrt(2m).
double kappa_threshold(double m, double big_m, double c);

struct LargePointBudget {
    int t = 0;       // gap-principle chain length
    int s = 0;       // medium-point chain length
    int budget = 0;  // 2s + t - 1
};

// Smallest t with (kappa-1)^t > M, largest s with
// 3^{s-1} < (1 + 9/eps) M / ((c^{-2}-1)((1-sqrt(lambda))^2(1-delta) - 16 delta)),
// and the resulting per-coset big-point budget.
LargePointBudget large_point_budget(double eps, double lambda, double delta, double kappa,
                                    double big_m, double c);

// log X - 3 log x + 4 log D for consecutive x-values (ascending, positive).
// Reported, not asserted: the additive constant in the repulsion bound is
// not pinned down.
std::vector<double> repulsion_margins(const std::vector<BigInt>& xs, const BigInt& d);

struct AbcCeiling {
    double exponent;      // 2(1 + 5 eps)
    double intermediate;  // 2(1 + eps)/(1 - 3 eps), always below the exponent
};

AbcCeiling abc_ceiling(double eps);

// h2 >= -2 log 2 + (kappa - 1) h1.
bool strong_gap_check(double h1, double h2, double kappa);

// The default constant set used throughout: eps, lambda, delta, kappa, M, c.
struct AuditConstants {
    double eps = 0.00153;
    double lambda = 0.000137;
    double delta = 0.0000684;
    double kappa = 7.516;
    double big_m = 276.1;
    double c = 0.861;
};

// Runs the full constant audit with the default set; every near-tie verdict
// carries an exact-arithmetic certificate.
std::vector<AuditItem> run_default_audit();

}  // namespace twistkit

#endif
