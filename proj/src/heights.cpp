#include "twistkit/heights.hpp"

#include <cmath>

namespace twistkit {

double weil_height(const BigRat& x) {
    BigInt r = abs(num(x));
    const BigInt& s = den(x);
    return log_big(r >= s ? r : s);
}

double weil_height(const CurvePoint& p) {
    if (p.is_infinity()) return 0.0;
    return weil_height(p.x());
}

namespace {

struct Series {
    double value;   // hhat of the (possibly pre-doubled) point
    double radius;  // certified error
};

// hhat for a point with x > D, via two exact doublings and the t-series.
Series canonical_series(const Curve& c, const BigRat& x0, double tol) {
    const BigRat x1 = double_x(c, x0);
    const BigRat x2 = double_x(c, x1);
    // x2 > D >= 1, so h = log(numerator).
    const double h2 = log_big(num(x2));

    double t = mpq_class(BigRat(c.d) / x2).get_d();
    const double logd_tail = log_big(c.d) + 4.6;
    double sum = 0.0;
    double weight = 1.0 / 16.0;  // 4^{-n} at n = 2
    int n = 2;
    double tail = weight * logd_tail;
    while (tail > 0.5 * tol && n < 64) {
        sum += weight * 0.5 * std::log1p(t * t);
        const double t2 = t * t;
        t = 4.0 * t * (1.0 - t2) / ((1.0 + t2) * (1.0 + t2));
        weight *= 0.25;
        ++n;
        tail = weight * logd_tail;
    }
    const double value = h2 / 16.0 + sum;
    const double slop = 1e-13 * (1.0 + std::fabs(value));
    return {value, tail + slop};
}

}  // namespace

HeightReport canonical_height(const CurvePoint& p, double tol) {
    if (tol <= 0) throw domain_error("canonical_height: tol must be positive");
    if (tol < 1e-12)
        throw precision_error("canonical_height: tol below double-precision floor");

    HeightReport rep;
    rep.weil = weil_height(p);
    if (p.is_torsion()) {
        rep.canonical = 0.0;
        rep.error_radius = 0.0;
        return rep;
    }

    const Curve& c = p.curve();
    require_squarefree(c, "canonical_height");
    BigRat x0 = p.x();
    double factor = 1.0;
    if (x0 <= 0) {  // -D <= x <= 0 branch: hhat(P) = hhat(2P)/4
        x0 = double_x(c, x0);
        factor = 4.0;
    }
    Series s = canonical_series(c, x0, tol * factor);
    rep.canonical = s.value / factor;
    rep.error_radius = s.radius / factor;
    if (rep.error_radius > tol)
        throw precision_error("canonical_height: could not reach requested tolerance");
    return rep;
}

HeightReport height_gap_report(const CurvePoint& p, double tol) {
    if (p.is_infinity() || p.is_torsion())
        throw domain_error("height_gap_report: torsion input");

    HeightReport rep = canonical_height(p, tol);
    const Curve& c = p.curve();
    const BigRat& x = p.x();
    const double h = rep.weil;
    const double hhat = rep.canonical;
    const double log2 = M_LN2;
    const double logd = log_big(c.d);
    const double margin = rep.error_radius + 1e-11;

    BigInt g;
    mpz_gcd(g.get_mpz_t(), num(x).get_mpz_t(), c.d.get_mpz_t());
    const double logg = log_big(g);

    auto within = [&](double v, double lo, double hi) {
        return v >= lo - margin && v <= hi + margin;
    };

    if (x > 0) {
        rep.envelope_verdicts["gap_envelope_positive_x"] =
            within(hhat - h, -logg - 2 * log2, -logg + (2.0 / 3.0) * log2);
    } else {
        // log+|x| = max(0, log |r| - log s)
        const BigInt ar = abs(num(x));
        const double logx = ar > den(x) ? log_big(ar) - log_big(den(x)) : 0.0;
        const double base = logd - logg - logx;
        rep.envelope_verdicts["gap_envelope_negative_x"] =
            within(hhat - h, base - 2 * log2, base + (2.0 / 3.0) * log2);
    }

    // 4 hhat(P) - h(2P), with h(2P) exact.
    const BigRat x2 = double_x(c, x);
    const double h2p = log_big(num(x2));  // x(2P) > D >= 1
    rep.envelope_verdicts["double_height_envelope"] =
        within(4 * hhat - h2p, -2 * log2, (2.0 / 3.0) * log2);

    rep.envelope_verdicts["double_height_lower"] =
        4 * hhat >= logd - 2 * log2 - 4 * margin;

    rep.envelope_verdicts["lang_lower"] =
        hhat >= 0.25 * logd - 0.5 * log2 - margin;

    return rep;
}

}  // namespace twistkit
