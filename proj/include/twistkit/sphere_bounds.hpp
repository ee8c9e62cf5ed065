#ifndef TWISTKIT_SPHERE_BOUNDS_HPP
#define TWISTKIT_SPHERE_BOUNDS_HPP

// Upper bounds on spherical-code sizes A(r, theta) and the small-point count
// pipeline built on them.  All counts are carried as natural logs; values
// like 1.89^10000 have no finite double representation.
//
// The quoted cap bounds are implemented exactly as printed in their source
// statements; see the README for the angle-convention caveat.

#include <map>
#include <string>

#include "twistkit/errors.hpp"

namespace twistkit {

enum class BoundMethod { rankin_cap, rankin_simplex, shannon, kl };

const char* bound_method_name(BoundMethod m);

struct BoundResult {
    double log_bound = 0.0;
    BoundMethod method = BoundMethod::shannon;
    std::map<std::string, double> params;
};

struct JacobiRoot {
    long k = 0;
    double alpha = 0.0;
    double root = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;  // tau_k
    double residual = 0.0;    // |P_k(root)| on the unit-normalized recurrence
};

// tau_k = sqrt(1 - (alpha^2 - 1)/((k+alpha)(k+alpha+1))), the analytic upper
// bound for the largest Jacobi root, and the bracket lower end
// tau_k - 2 pi^{2/3} / ((k+alpha)(k+alpha+1) tau_k)^{1/3}.
double jacobi_tau(long k, double alpha);
double jacobi_bracket_lo(long k, double alpha);

// Largest real root of the symmetric Jacobi polynomial P_k^{(alpha,alpha)},
// by sign-change bisection of the three-term recurrence inside the bracket
// above (widened leftward when the bracket does not yet straddle the root).
JacobiRoot jacobi_largest_root(long k, double alpha);

// A(r, theta) <= 4 / (1 - t_{k+1}) * binom(k + r - 2, r) with the smallest k
// whose bracket lower end clears cos(theta); t_{k+1} is taken as tau_{k+1}
// when that is < 1 and as the bisection root otherwise (low dimensions).
BoundResult kl_bound(int r, double theta, long k_cap = 5000000);

// Cap bound for theta < pi/4 (both the integral and the closed form, the
// smaller wins) and the simplex bound 2 sin^2 / (2 sin^2 - 1) for
// pi/4 < theta < pi/2.  theta = pi/4 is out of domain.
BoundResult rankin_bounds(int r, double theta);

// sqrt(pi) Gamma((r-1)/2) / (Gamma(r/2) * int_0^theta sin^{r-2}x dx), with
// the closed-form variant reported in params when it is defined.
BoundResult shannon_bound(int r, double theta);

// (1+N)^{1+N} / N^N with N = 2(1-eps)/sqrt(7-8eps) - 1/2; the asymptotic
// per-dimension base of the KL pipeline, < 1.89 on [0, 1/650).
double kl_asymptotic_base(double eps);

struct SmallPointBound {
    BoundResult best;
    double theta = 0.0;
    double log_target = 0.0;  // (r + 19 r^{1/3}) log 1.89
    std::map<std::string, double> per_method;  // log bound per applicable method
};

// Bound on the number of small points in one coset: the methods above
// evaluated at dimension r+1 and the angle with sin(theta/2) =
// 1 / (2 sqrt(2(1+eps))), with the comparison target 1.89^{r + 19 r^{1/3}}.
SmallPointBound small_point_count_bound(int r, double eps);

namespace detail {

// log of int_0^theta sin^n x dx, scaled adaptive Simpson (primary route).
double log_sin_power_integral(int n, double theta);

// Same integral by the ascending series in sin(theta); requires sin < 1.
double log_sin_power_integral_series(int n, double theta);

// Forward recurrence I_n = ((n-1) I_{n-2} - sin^{n-1} cos)/n; only stable
// while sin^n theta stays well above the absolute rounding floor.
double sin_power_integral_recurrence(int n, double theta);

// log of int_0^beta sin^n x (cos x - cos beta) dx.
double log_rankin_integral(int n, double beta);

}  // namespace detail

}  // namespace twistkit

#endif
