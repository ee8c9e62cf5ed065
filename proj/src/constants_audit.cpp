#include "twistkit/constants_audit.hpp"

#include <cmath>

#include "twistkit/sphere_bounds.hpp"

namespace twistkit {

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::lt: return "<";
        case Rel::gt: return ">";
        case Rel::le: return "<=";
        case Rel::ge: return ">=";
    }
    return "?";
}

double sum_lower_bound(double x, double big_x, double d) {
    if (!(d < x) || !(x <= big_x)) throw domain_error("sum_lower_bound: need D < x <= X");
    const double b = big_x / x;
    const double mu = (d / x) * (d / x);
    const double denom = std::sqrt(b * b - mu) + std::sqrt(b * (1.0 - mu));
    const double val = (b + mu) / denom;
    return val * val * x;
}

double double_ratio(double x, double d) {
    if (!(x > d)) throw domain_error("double_ratio: need x > D");
    const double mu = d / x, mu2 = mu * mu;
    return (1.0 + mu2) * (1.0 + mu2) / (4.0 * (1.0 - mu2));
}

double roth_exponent(double lambda, double delta) {
    if (lambda < 0 || delta < 0) throw domain_error("roth_exponent: negative parameter");
    const double sl = std::sqrt(lambda);
    return 8.0 * (1.0 - 63.0 * lambda - 418.0 * delta) /
           ((1.0 + sl) * (1.0 + sl) * (1.0 + delta) + 16.0 * delta);
}

double kappa_threshold(double m, double big_m, double c) {
    if (!(c < 1.0)) throw domain_error("kappa_threshold: need c < 1");
    if (!(big_m >= 72.0)) throw domain_error("kappa_threshold: need M >= 72");
    const double gap = c - 4.0 * std::sqrt(m / big_m);
    if (!(gap > 0)) throw domain_error("kappa_threshold: c - 4 sqrt(m/M) must be positive");
    return (1.0 + (1.0 / (c * c) + 1.0) / big_m) * std::sqrt(2.0 * m) / gap;
}

LargePointBudget large_point_budget(double eps, double lambda, double delta, double kappa,
                                    double big_m, double c) {
    if (eps <= 0 || lambda <= 0 || delta <= 0 || big_m <= 0 || c <= 0)
        throw domain_error("large_point_budget: parameters must be positive");
    if (kappa <= 2.0)
        throw numeric_error("large_point_budget: kappa <= 2 never clears the gap chain");

    LargePointBudget out;
    double power = 1.0;
    for (int t = 1;; ++t) {
        power *= kappa - 1.0;
        if (power > big_m) {
            out.t = t;
            break;
        }
        if (t > 1000) throw numeric_error("large_point_budget: gap chain does not terminate");
    }

    const double sl = std::sqrt(lambda);
    const double g = (1.0 - sl) * (1.0 - sl) * (1.0 - delta) - 16.0 * delta;
    if (g <= 0) throw numeric_error("large_point_budget: height-chain factor not positive");
    const double rhs = (1.0 + 9.0 / eps) * big_m / ((1.0 / (c * c) - 1.0) * g);
    int s = static_cast<int>(std::floor(std::log(rhs) / std::log(3.0))) + 1;
    while (std::pow(3.0, s - 1) >= rhs) --s;
    while (std::pow(3.0, s) < rhs) ++s;
    out.s = s;
    out.budget = 2 * s + out.t - 1;
    return out;
}

std::vector<double> repulsion_margins(const std::vector<BigInt>& xs, const BigInt& d) {
    std::vector<double> out;
    if (xs.size() < 2) return out;
    const double logd = log_big(d);
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        if (xs[i] <= 0 || xs[i + 1] < xs[i])
            throw domain_error("repulsion_margins: x-values must be positive and ascending");
        out.push_back(log_big(xs[i + 1]) - 3.0 * log_big(xs[i]) + 4.0 * logd);
    }
    return out;
}

AbcCeiling abc_ceiling(double eps) {
    if (!(eps > 0) || !(eps < 1.0 / 15.0))
        throw domain_error("abc_ceiling: eps must lie in (0, 1/15)");
    return {2.0 * (1.0 + 5.0 * eps), 2.0 * (1.0 + eps) / (1.0 - 3.0 * eps)};
}

bool strong_gap_check(double h1, double h2, double kappa) {
    if (h1 < 0 || h2 < h1) throw domain_error("strong_gap_check: need h2 >= h1 >= 0");
    return h2 >= -2.0 * std::log(2.0) + (kappa - 1.0) * h1;
}

namespace {

// sign of P - Q sqrt(lam) for rationals P, Q and lam >= 0
int cmp_sqrt(const BigRat& p, const BigRat& q, const BigRat& lam) {
    const int sp = sgn(p), sq = sgn(q);
    if (sq == 0 || sgn(lam) == 0) return sp;
    if (sp <= 0 && sq > 0) return -1;
    if (sp >= 0 && sq < 0) return 1;
    if (sp == 0) return -sq;
    const BigRat diff = p * p - q * q * lam;
    const int s = sgn(diff);
    return sp > 0 ? s : -s;
}

struct ExactConstants {
    BigRat eps = make_rat(153, 100000);
    BigRat lambda = make_rat(137, 1000000);
    BigRat delta = make_rat(684, 10000000);
    BigRat kappa = make_rat(7516, 1000);
    BigRat big_m = make_rat(2761, 10);
    BigRat c = make_rat(861, 1000);
};

// 8(1 - 63 lam - 418 del) > kappa * ((1+sqrt lam)^2 (1+del) + 16 del)
bool certify_roth_exceeds_kappa(const ExactConstants& k) {
    const BigRat a = 8 * (1 - 63 * k.lambda - 418 * k.delta);
    const BigRat b = k.kappa * ((1 + k.lambda) * (1 + k.delta) + 16 * k.delta);
    const BigRat c2 = 2 * k.kappa * (1 + k.delta);
    return cmp_sqrt(a - b, c2, k.lambda) > 0;
}

// (c - 4 sqrt(m/M))^{-1} (1 + (c^{-2}+1)/M) sqrt(2m) < kappa for m = 4:
// u sqrt2 + w sqrt M < kappa c with u = 2(1 + (c^{-2}+1)/M), w = 8 kappa / M.
bool certify_kappa_threshold_below(const ExactConstants& k) {
    const BigRat cinv2 = 1 / (k.c * k.c);
    if (sgn(k.c * k.c * k.big_m - 64) <= 0) return false;  // denominator sign
    const BigRat u = 2 * (1 + (cinv2 + 1) / k.big_m);
    const BigRat w = 8 * k.kappa / k.big_m;
    const BigRat v = k.kappa * k.c;
    const BigRat s = v * v - 2 * u * u - w * w * k.big_m;
    if (sgn(s) <= 0) return false;
    return sgn(s * s - 8 * u * u * w * w * k.big_m) > 0;
}

// RHS of the medium-point inequality vs 3^k:
// sign of (1 + 9/eps) M - 3^k (c^{-2}-1) [(1+lam)(1-del) - 16 del - 2 sqrt(lam)(1-del)]
int cmp_medexp_rhs_vs_power(const ExactConstants& k, int pw) {
    const BigRat a2 = (1 + k.lambda) * (1 - k.delta) - 16 * k.delta;
    const BigRat b2 = 2 * (1 - k.delta);
    if (cmp_sqrt(a2, b2, k.lambda) <= 0)
        throw numeric_error("medexp: height-chain factor not positive");
    BigInt p3 = 1;
    for (int i = 0; i < pw; ++i) p3 *= 3;
    const BigRat cfac = 1 / (k.c * k.c) - 1;
    const BigRat p = (1 + 9 / k.eps) * k.big_m - BigRat(p3) * cfac * a2;
    const BigRat q = -BigRat(p3) * cfac * b2;
    return cmp_sqrt(p, q, k.lambda);
}

AuditItem make_item(std::string name, double computed, double threshold, Rel rel, bool verdict,
                    bool certified) {
    AuditItem it;
    it.name = std::move(name);
    it.computed = computed;
    it.threshold = threshold;
    it.relation = rel;
    it.verdict = verdict;
    it.certified = certified;
    return it;
}

}  // namespace

std::vector<AuditItem> run_default_audit() {
    const AuditConstants k;
    const ExactConstants ek;
    std::vector<AuditItem> items;

    // approximation exponent strictly above kappa
    {
        const double v = roth_exponent(k.lambda, k.delta);
        const bool exact_ok = certify_roth_exceeds_kappa(ek);
        auto it = make_item("roth_exponent_above_kappa", v, k.kappa, Rel::gt,
                            exact_ok && v > k.kappa - 1e-12, exact_ok);
        it.inputs = {{"lambda", k.lambda}, {"delta", k.delta}};
        items.push_back(it);
    }
    // independence threshold strictly below kappa
    {
        const double v = kappa_threshold(4.0, k.big_m, k.c);
        const bool exact_ok = certify_kappa_threshold_below(ek);
        auto it = make_item("kappa_threshold_below_kappa", v, k.kappa, Rel::lt,
                            exact_ok && v < k.kappa + 1e-12, exact_ok);
        it.inputs = {{"m", 4.0}, {"M", k.big_m}, {"c", k.c}};
        items.push_back(it);
    }
    // (kappa - 1)^3 > M and (kappa - 1)^2 <= M pin the gap chain at t = 3
    {
        const BigRat km1 = ek.kappa - 1;
        const bool cube_ok = sgn(km1 * km1 * km1 - ek.big_m) > 0;
        const bool sq_ok = sgn(km1 * km1 - ek.big_m) < 0;
        const double km1d = k.kappa - 1.0;
        items.push_back(make_item("gap_chain_cube_above_M", km1d * km1d * km1d, k.big_m, Rel::gt,
                                  cube_ok, true));
        items.push_back(
            make_item("gap_chain_square_below_M", km1d * km1d, k.big_m, Rel::lt, sq_ok, true));
    }
    // medium-point count: 3^13 < RHS < 3^14 certifies s = 14
    {
        const double sl = std::sqrt(k.lambda);
        const double g = (1.0 - sl) * (1.0 - sl) * (1.0 - k.delta) - 16.0 * k.delta;
        const double rhs =
            (1.0 + 9.0 / k.eps) * k.big_m / ((1.0 / (k.c * k.c) - 1.0) * g);
        const bool above = cmp_medexp_rhs_vs_power(ek, 13) > 0;
        const bool below = cmp_medexp_rhs_vs_power(ek, 14) < 0;
        items.push_back(
            make_item("medium_rhs_above_3_pow_13", rhs, std::pow(3.0, 13), Rel::gt, above, true));
        items.push_back(
            make_item("medium_rhs_below_3_pow_14", rhs, std::pow(3.0, 14), Rel::lt, below, true));
    }
    // eps admissible for the small-point pipeline
    {
        const bool ok = sgn(ek.eps - BigRat(1, 650)) < 0;
        items.push_back(make_item("eps_below_1_over_650", k.eps, 1.0 / 650.0, Rel::lt, ok, true));
    }
    // budget: t = 3, s = 14, 2s + t - 1 = 30
    {
        const LargePointBudget b =
            large_point_budget(k.eps, k.lambda, k.delta, k.kappa, k.big_m, k.c);
        items.push_back(make_item("gap_chain_length_t", b.t, 3, Rel::le, b.t == 3, false));
        items.push_back(make_item("medium_chain_length_s", b.s, 14, Rel::le, b.s == 14, false));
        items.push_back(
            make_item("large_point_budget_total", b.budget, 30, Rel::le, b.budget <= 30, false));
    }
    // asymptotic base of the sphere pipeline stays under 1.89
    {
        const double b0 = kl_asymptotic_base(0.0);
        const double b1 = kl_asymptotic_base(1.0 / 650.0 - 1e-12);
        items.push_back(make_item("kl_base_at_0", b0, 1.89, Rel::lt, b0 < 1.89 - 1e-12, false));
        items.push_back(
            make_item("kl_base_at_sup", b1, 1.89, Rel::lt, b1 < 1.89 - 1e-12, false));
    }
    return items;
}

}  // namespace twistkit
