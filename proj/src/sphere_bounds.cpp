#include "twistkit/sphere_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace twistkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

double lchoose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Classic recursive adaptive Simpson on [a, b] with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    // The integrands here can be sharply peaked, so the absolute tolerance
    // scale comes from a grid sample of the envelope, not from the coarse
    // Simpson estimate (which may miss the peak entirely).
    double peak = 0.0;
    const int grid = 128;
    for (int i = 0; i <= grid; ++i)
        peak = std::max(peak, std::fabs(f(a + (b - a) * i / grid)));
    const double scale = std::max(peak * (b - a), 1e-280);
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, rel_tol * scale, 45);
}

}  // namespace

namespace detail {

double log_sin_power_integral(int n, double theta) {
    if (n < 0 || theta <= 0 || theta > kPi / 2 + 1e-12)
        throw domain_error("log_sin_power_integral: bad arguments");
    if (n == 0) return std::log(theta);
    // scale out the endpoint value sin^n(theta); the scaled integrand is <= 1
    const double logs_peak = n * std::log(std::sin(theta));
    auto g = [&](double x) {
        if (x <= 0) return 0.0;
        return std::exp(n * std::log(std::sin(x)) - logs_peak);
    };
    const double integral = integrate(g, 0.0, theta, 1e-11);
    return logs_peak + std::log(integral);
}

double log_sin_power_integral_series(int n, double theta) {
    const double s = std::sin(theta);
    if (s >= 1.0) throw domain_error("series form requires sin(theta) < 1");
    // int_0^theta sin^n = sum_j ((2j-1)!!/(2j)!!) sin^{n+2j+1}/(n+2j+1)
    double coeff = 1.0, sum = 0.0, s2 = s * s, spow = 1.0;
    for (int j = 0; j < 100000; ++j) {
        const double term = coeff * spow / (n + 2.0 * j + 1.0);
        sum += term;
        if (term < 1e-18 * sum) break;
        coeff *= (2.0 * j + 1.0) / (2.0 * j + 2.0);
        spow *= s2;
    }
    return (n + 1.0) * std::log(s) + std::log(sum);
}

double sin_power_integral_recurrence(int n, double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    double i0 = theta, i1 = 1.0 - c;
    if (n == 0) return i0;
    if (n == 1) return i1;
    double prev = (n % 2 == 0) ? i0 : i1;
    for (int m = (n % 2 == 0) ? 2 : 3; m <= n; m += 2) {
        prev = (-std::pow(s, m - 1) * c + (m - 1) * prev) / m;
    }
    return prev;
}

double log_rankin_integral(int n, double beta) {
    const double cb = std::cos(beta);
    const double logs_peak = n * std::log(std::sin(beta));
    auto g = [&](double x) {
        if (x <= 0) return 0.0;
        const double w = std::cos(x) - cb;
        if (w <= 0) return 0.0;
        return std::exp(n * std::log(std::sin(x)) - logs_peak) * w;
    };
    const double integral = integrate(g, 0.0, beta, 1e-11);
    return logs_peak + std::log(integral);
}

}  // namespace detail

const char* bound_method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::rankin_cap: return "rankin_cap";
        case BoundMethod::rankin_simplex: return "rankin_simplex";
        case BoundMethod::shannon: return "shannon";
        case BoundMethod::kl: return "kl";
    }
    return "?";
}

double jacobi_tau(long k, double alpha) {
    const double ka = k + alpha;
    return std::sqrt(1.0 - (alpha * alpha - 1.0) / (ka * (ka + 1.0)));
}

double jacobi_bracket_lo(long k, double alpha) {
    const double ka = k + alpha;
    const double tau = jacobi_tau(k, alpha);
    return tau - 2.0 * std::pow(kPi, 2.0 / 3.0) / std::cbrt(ka * (ka + 1.0) * tau);
}

namespace {

// P_k^{(alpha,alpha)}(t) by the three-term recurrence, renormalized each step
// so the returned value is meaningful only up to positive scale (sign and
// near-zero detection are what the bisection needs).
double jacobi_eval_scaled(long k, double alpha, double t) {
    if (k == 0) return 1.0;
    double pm1 = 1.0;                  // P_0
    double p = (alpha + 1.0) * t;      // P_1
    for (long n = 2; n <= k; ++n) {
        const double c1 = 2.0 * n * (n + 2.0 * alpha) * (2.0 * n + 2.0 * alpha - 2.0);
        const double c2 =
            (2.0 * n + 2.0 * alpha - 1.0) * (2.0 * n + 2.0 * alpha) * (2.0 * n + 2.0 * alpha - 2.0);
        const double c3 = 2.0 * (n + alpha - 1.0) * (n + alpha - 1.0) * (2.0 * n + 2.0 * alpha);
        const double next = (c2 * t * p - c3 * pm1) / c1;
        pm1 = p;
        p = next;
        const double m = std::max(std::fabs(p), std::fabs(pm1));
        if (m > 0) {
            p /= m;
            pm1 /= m;
        }
    }
    return p;
}

}  // namespace

JacobiRoot jacobi_largest_root(long k, double alpha) {
    if (k < 1) throw domain_error("jacobi_largest_root: k must be >= 1");
    if (alpha <= -1.0) throw domain_error("jacobi_largest_root: alpha must exceed -1");

    JacobiRoot out;
    out.k = k;
    out.alpha = alpha;
    out.bracket_hi = jacobi_tau(k, alpha);
    out.bracket_lo = jacobi_bracket_lo(k, alpha);

    auto f = [&](double t) { return jacobi_eval_scaled(k, alpha, t); };

    // The polynomial is positive beyond its largest root; scan down from the
    // right for the last sign change, widening leftward if the bracket does
    // not straddle it yet.
    double hi = std::min(out.bracket_hi, 1.0);
    if (f(hi) <= 0) hi = 1.0;  // roots live in (-1, 1); P_k(1) > 0
    double lo = std::max(out.bracket_lo, -1.0 + 1e-15);
    const int grid = 128;
    double a = hi, b = hi;
    bool found = false;
    for (int widen = 0; widen < 8 && !found; ++widen) {
        double prev_t = hi, prev_f = f(hi);
        for (int i = 1; i <= grid; ++i) {
            const double t = hi + (lo - hi) * i / grid;
            const double ft = f(t);
            if (prev_f > 0 && ft <= 0) {
                a = t;       // f(a) <= 0
                b = prev_t;  // f(b) > 0
                found = true;
                break;
            }
            prev_t = t;
            prev_f = ft;
        }
        if (!found) {
            const double width = hi - lo;
            lo = std::max(lo - std::max(width, 0.25), -1.0 + 1e-15);
        }
    }
    if (!found) throw numeric_error("jacobi_largest_root: no sign change located");

    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::fabs(b)); ++it) {
        const double m = 0.5 * (a + b);
        if (f(m) > 0)
            b = m;
        else
            a = m;
    }
    out.root = 0.5 * (a + b);
    out.residual = std::fabs(f(out.root));
    if (out.residual > 1e-8)
        throw numeric_error("jacobi_largest_root: residual too large after bisection");
    return out;
}

BoundResult kl_bound(int r, double theta, long k_cap) {
    if (r < 3) throw domain_error("kl_bound: r must be >= 3");
    const double ct = std::cos(theta);
    if (!(theta > 0) || !(ct < 1.0) || theta >= kPi / 2)
        throw domain_error("kl_bound: need 0 < theta < pi/2 with cos theta < 1");

    const double alpha = (r - 3.0) / 2.0;
    long k = 0;
    for (long kk = 1; kk <= k_cap; ++kk) {
        if (jacobi_bracket_lo(kk, alpha) >= ct) {
            k = kk;
            break;
        }
    }
    if (k == 0) throw numeric_error("kl_bound: no admissible k below the cap");

    const double tau_next = jacobi_tau(k + 1, alpha);
    double t_next = tau_next;
    if (!(tau_next < 1.0)) {
        // low dimensions: tau exceeds 1 and only the actual root certifies
        t_next = jacobi_largest_root(k + 1, alpha).root;
    }
    BoundResult res;
    res.method = BoundMethod::kl;
    res.log_bound = std::log(4.0) - std::log1p(-t_next) +
                    lchoose(static_cast<double>(k) + r - 2.0, static_cast<double>(r));
    res.params["k"] = static_cast<double>(k);
    res.params["alpha"] = alpha;
    res.params["t_k_plus_1"] = t_next;
    res.params["tau_k_plus_1"] = tau_next;
    return res;
}

BoundResult rankin_bounds(int r, double theta) {
    if (!(theta > 0) || !(theta < kPi / 2))
        throw domain_error("rankin_bounds: need 0 < theta < pi/2");
    if (std::fabs(theta - kPi / 4) < 1e-15)
        throw domain_error("rankin_bounds: theta = pi/4 is out of domain");

    BoundResult res;
    if (theta > kPi / 4) {
        const double s2 = std::sin(theta) * std::sin(theta);
        res.method = BoundMethod::rankin_simplex;
        res.log_bound = std::log(2.0 * s2 / (2.0 * s2 - 1.0));
        res.params["sin2"] = s2;
        return res;
    }

    if (r < 2) throw domain_error("rankin_bounds: r must be >= 2 for the cap form");
    const double beta = std::asin(std::sqrt(2.0) * std::sin(theta));
    const double sb = std::sin(beta), cb = std::cos(beta), tb = sb / cb;

    // integral form
    const double log_integral_bound = 0.5 * std::log(kPi) + std::lgamma((r - 1.0) / 2.0) +
                                      std::log(sb) + std::log(tb) - std::log(2.0) -
                                      std::lgamma(r / 2.0) - detail::log_rankin_integral(r - 2, beta);
    // closed form; its denominator goes negative when beta is too steep
    double log_closed_bound = kInf;
    const double denom = 1.0 - 3.0 / (r + 3.0) * tb * tb;
    if (denom > 0) {
        log_closed_bound = std::log(2.0) + 0.5 * std::log(kPi) + std::lgamma((r + 3.0) / 2.0) +
                           std::log(cb) - std::lgamma(r / 2.0) - (r - 1.0) * std::log(sb) -
                           std::log(denom);
    }

    res.method = BoundMethod::rankin_cap;
    res.log_bound = std::min(log_integral_bound, log_closed_bound);
    res.params["beta"] = beta;
    res.params["log_integral_form"] = log_integral_bound;
    res.params["log_closed_form"] = log_closed_bound;
    return res;
}

BoundResult shannon_bound(int r, double theta) {
    if (r < 2) throw domain_error("shannon_bound: r must be >= 2");
    if (!(theta > 0) || theta > kPi / 2 + 1e-12)
        throw domain_error("shannon_bound: need 0 < theta <= pi/2");

    BoundResult res;
    res.method = BoundMethod::shannon;
    res.log_bound = 0.5 * std::log(kPi) + std::lgamma((r - 1.0) / 2.0) - std::lgamma(r / 2.0) -
                    detail::log_sin_power_integral(r - 2, theta);

    const double st = std::sin(theta), ct = std::cos(theta);
    double log_closed = kInf;
    if (ct > 0) {
        const double denom = 1.0 - (st / ct) * (st / ct) / r;
        if (denom > 0) {
            log_closed = std::log(2.0) + 0.5 * std::log(kPi) + std::lgamma((r + 1.0) / 2.0) +
                         std::log(ct) - std::lgamma(r / 2.0) - (r - 1.0) * std::log(st) -
                         std::log(denom);
        }
    }
    res.params["log_closed_form"] = log_closed;
    return res;
}

double kl_asymptotic_base(double eps) {
    if (eps < 0 || eps >= 1.0 / 650.0)
        throw domain_error("kl_asymptotic_base: eps must lie in [0, 1/650)");
    const double n = 2.0 * (1.0 - eps) / std::sqrt(7.0 - 8.0 * eps) - 0.5;
    return std::exp((1.0 + n) * std::log1p(n) - n * std::log(n));
}

SmallPointBound small_point_count_bound(int r, double eps) {
    if (r < 1) throw domain_error("small_point_count_bound: r must be >= 1");
    if (!(eps > 0) || eps >= 1.0 / 650.0)
        throw domain_error("small_point_count_bound: eps must lie in (0, 1/650)");

    SmallPointBound out;
    out.theta = 2.0 * std::asin(1.0 / (2.0 * std::sqrt(2.0 * (1.0 + eps))));
    out.log_target = (r + 19.0 * std::cbrt(static_cast<double>(r))) * std::log(1.89);

    const int dim = r + 1;
    BoundResult best;
    best.log_bound = kInf;
    bool have = false;
    for (auto fn : {&rankin_bounds, &shannon_bound}) {
        BoundResult b = fn(dim, out.theta);
        out.per_method[bound_method_name(b.method)] = b.log_bound;
        if (!have || b.log_bound < best.log_bound) {
            best = b;
            have = true;
        }
    }
    if (dim >= 3) {
        BoundResult b = kl_bound(dim, out.theta);
        out.per_method[bound_method_name(b.method)] = b.log_bound;
        if (!have || b.log_bound < best.log_bound) {
            best = b;
            have = true;
        }
    }
    if (!have) throw numeric_error("small_point_count_bound: no applicable method");
    out.best = best;
    return out;
}

}  // namespace twistkit
