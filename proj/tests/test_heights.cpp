#include <cmath>

#include "doctest.h"
#include "sample_points.hpp"
#include "twistkit/heights.hpp"

using namespace twistkit;
using testutil::point_pool;

namespace {

// Independent oracle: h(2^k P) / 4^k with exact repeated doubling, certified
// within 4^{-k} (log D + 4.6).
double doubling_oracle(const CurvePoint& p, int k) {
    BigRat x = p.x();
    for (int i = 0; i < k; ++i) x = double_x(p.curve(), x);
    return weil_height(x) / std::pow(4.0, k);
}

}  // namespace

TEST_CASE("weil height examples") {
    Curve c((BigInt(6)));
    CHECK(weil_height(CurvePoint(c, BigRat(294), BigRat(5040))) ==
          doctest::Approx(std::log(294.0)).epsilon(1e-14));
    CHECK(weil_height(CurvePoint::infinity(c)) == 0.0);
    CHECK(weil_height(CurvePoint(c, make_rat(25, 4), make_rat(-35, 8))) ==
          doctest::Approx(std::log(25.0)).epsilon(1e-14));
}

TEST_CASE("canonical height of torsion is zero") {
    Curve c((BigInt(6)));
    for (const auto& t : torsion_points(c)) {
        HeightReport r = canonical_height(t);
        CHECK(r.canonical == 0.0);
        CHECK(r.error_radius == 0.0);
    }
}

TEST_CASE("canonical height guards") {
    Curve c((BigInt(6)));
    CurvePoint p(c, BigRat(294), BigRat(5040));
    CHECK_THROWS_AS(canonical_height(p, 0.0), domain_error);
    CHECK_THROWS_AS(canonical_height(p, 1e-15), precision_error);
}

TEST_CASE("canonical height of (294, 5040) on E_6") {
    Curve c((BigInt(6)));
    CurvePoint p(c, BigRat(294), BigRat(5040));
    HeightReport r = canonical_height(p);
    CHECK(r.error_radius <= 1e-9);
    // gcd-corrected envelope window around log 294
    CHECK(r.canonical >= 2.5055);
    CHECK(r.canonical <= 4.3539);
    // doubling oracle at k = 4
    const double oracle = doubling_oracle(p, 4);
    const double slack = std::pow(4.0, -4) * (std::log(6.0) + 4.6) + 1e-9;
    CHECK(std::fabs(r.canonical - oracle) <= slack);
}

TEST_CASE("canonical height against a deep exact doubling") {
    // eight exact doublings pin hhat to ~1e-4 independently of the series
    for (long d : {5L, 6L}) {
        CurvePoint g = testutil::generator(BigInt(d));
        HeightReport r = canonical_height(g);
        const double oracle = doubling_oracle(g, 8);
        const double slack = std::pow(4.0, -8) * (std::log(double(d)) + 4.6) + 1e-9;
        CHECK(std::fabs(r.canonical - oracle) <= slack);
    }
}

TEST_CASE("canonical height against the doubling oracle on sample pools") {
    for (long d : {5L, 6L, 14L, 1254L}) {
        for (const auto& p : point_pool(BigInt(d), 2)) {
            HeightReport r = canonical_height(p);
            const double oracle = doubling_oracle(p, 5);
            const double slack =
                std::pow(4.0, -5) * (log_big(BigInt(d)) + 4.6) + r.error_radius;
            CHECK(std::fabs(r.canonical - oracle) <= slack);
        }
    }
}

TEST_CASE("canonical height is quadratic under doubling") {
    const double tol = kDefaultHeightTol;
    for (long d : {5L, 6L, 1254L}) {
        for (const auto& p : point_pool(BigInt(d), 2)) {
            HeightReport hp = canonical_height(p, tol);
            HeightReport h2p = canonical_height(scalar_mul(2, p), tol);
            CHECK(std::fabs(h2p.canonical - 4.0 * hp.canonical) <= 5.0 * tol);
        }
    }
}

TEST_CASE("canonical height scales like m^2") {
    const double tol = kDefaultHeightTol;
    CurvePoint g = testutil::generator(BigInt(6));
    HeightReport h1 = canonical_height(g, tol);
    for (int m = 2; m <= 5; ++m) {
        HeightReport hm = canonical_height(scalar_mul(m, g), tol);
        CHECK(std::fabs(hm.canonical - m * m * h1.canonical) <= m * m * tol);
    }
}

TEST_CASE("canonical height is invariant under torsion translation") {
    const double tol = kDefaultHeightTol;
    for (long d : {5L, 6L, 1254L}) {
        CurvePoint g = testutil::generator(BigInt(d));
        HeightReport base = canonical_height(g, tol);
        for (const auto& t : torsion_points(g.curve())) {
            CurvePoint p = add(g, t);
            if (p.is_torsion()) continue;
            HeightReport hr = canonical_height(p, tol);
            CHECK(std::fabs(hr.canonical - base.canonical) <= 2.0 * tol);
        }
    }
}

TEST_CASE("height gap report verdicts") {
    Curve c6((BigInt(6)));
    HeightReport pos = height_gap_report(CurvePoint(c6, BigRat(294), BigRat(5040)));
    CHECK(pos.envelope_verdicts.count("gap_envelope_positive_x") == 1);
    CHECK(pos.all_pass());

    HeightReport neg = height_gap_report(CurvePoint(c6, BigRat(-3), BigRat(9)));
    CHECK(neg.envelope_verdicts.count("gap_envelope_negative_x") == 1);
    CHECK(neg.envelope_verdicts.at("gap_envelope_negative_x"));
    CHECK(neg.all_pass());

    Curve c1254((BigInt(1254)));
    HeightReport big = height_gap_report(CurvePoint(c1254, BigRat(-98), BigRat(12376)));
    CHECK(big.envelope_verdicts.at("lang_lower"));
    CHECK(big.all_pass());

    CHECK_THROWS_AS(height_gap_report(CurvePoint(c6, BigRat(6), BigRat(0))), domain_error);
}

TEST_CASE("height gap report passes on rational sample points") {
    for (long d : {5L, 6L, 14L, 1254L}) {
        for (const auto& p : point_pool(BigInt(d), 2)) {
            CHECK(height_gap_report(p).all_pass());
        }
    }
}
