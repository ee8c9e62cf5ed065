#include <cmath>

#include "doctest.h"
#include "twistkit/constants_audit.hpp"
#include "twistkit/curve.hpp"

using namespace twistkit;

TEST_CASE("sum lower bound") {
    // B = 2, mu ~ 0: ((2)/(2 + sqrt 2))^2 ~ 0.343146
    const double d = 1000.0, x = 5e6, X = 1e7;
    CHECK(sum_lower_bound(x, X, d) / x == doctest::Approx(0.3431458).epsilon(1e-4));
    // B -> 1, mu -> 0 approaches the quarter floor
    CHECK(sum_lower_bound(1e9, 1e9, 1.0) / 1e9 == doctest::Approx(0.25).epsilon(1e-6));
    // always above x/4
    for (double b : {1.0, 1.5, 4.0, 100.0}) {
        for (double mu_scale : {2.0, 10.0, 1000.0}) {
            const double xx = mu_scale * d;
            CHECK(sum_lower_bound(xx, b * xx, d) > 0.25 * xx);
        }
    }
    CHECK_THROWS_AS(sum_lower_bound(10.0, 5.0, 1.0), domain_error);
    CHECK_THROWS_AS(sum_lower_bound(1.0, 5.0, 2.0), domain_error);
}

TEST_CASE("sum lower bound against the exact group law") {
    // x(P + R) >= bound * x(R) for integral points D < x(R) <= x(P)
    Curve c((BigInt(6)));
    const CurvePoint pts[] = {CurvePoint(c, BigRat(12), BigRat(36)),
                              CurvePoint(c, BigRat(18), BigRat(72)),
                              CurvePoint(c, BigRat(294), BigRat(5040))};
    for (const auto& r : pts) {
        for (const auto& p : pts) {
            if (p.x() < r.x()) continue;
            for (const auto& q : {p, negate(p)}) {
                if (q == negate(r)) continue;
                CurvePoint sum = add(q, r);
                if (sum.is_infinity()) continue;
                const double bound =
                    sum_lower_bound(mpq_class(r.x()).get_d(), mpq_class(q.x()).get_d(), 6.0);
                CHECK(mpq_class(sum.x()).get_d() >= bound * (1.0 - 1e-9));
            }
        }
    }
}

TEST_CASE("doubling ratio") {
    CHECK(double_ratio(1e12, 1.0) == doctest::Approx(0.25).epsilon(1e-9));
    const double x = (1.0 + std::sqrt(2.0));
    CHECK(double_ratio(x, 1.0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-9));
    CHECK_THROWS_AS(double_ratio(5.0, 6.0), domain_error);

    // exact oracle on E_6 at x = 294
    Curve c((BigInt(6)));
    const BigRat x2 = double_x(c, BigRat(294));
    const double exact_ratio = mpq_class(x2 / 294).get_d();
    CHECK(double_ratio(294.0, 6.0) == doctest::Approx(exact_ratio).epsilon(1e-12));
}

TEST_CASE("approximation exponent expression") {
    CHECK(roth_exponent(0.0, 0.0) == doctest::Approx(8.0));
    const double v = roth_exponent(0.000137, 0.0000684);
    CHECK(v == doctest::Approx(7.5165).epsilon(2e-4));
    CHECK(v > 7.516);
    CHECK(roth_exponent(0.001, 0.0) < roth_exponent(0.0005, 0.0));
    CHECK(roth_exponent(0.0, 0.001) < roth_exponent(0.0, 0.0005));
}

TEST_CASE("independence threshold") {
    const double v = kappa_threshold(4.0, 276.1, 0.861);
    CHECK(v == doctest::Approx(7.5156).epsilon(2e-4));
    CHECK(v < 7.516);
    // M -> infinity limit: sqrt(2m)/c
    CHECK(kappa_threshold(4.0, 1e12, 0.861) ==
          doctest::Approx(std::sqrt(8.0) / 0.861).epsilon(1e-5));
    CHECK_THROWS_AS(kappa_threshold(4.0, 276.1, 0.48), domain_error);
    CHECK_THROWS_AS(kappa_threshold(4.0, 50.0, 0.861), domain_error);
    CHECK_THROWS_AS(kappa_threshold(4.0, 276.1, 1.5), domain_error);
    // c = 0.5 clears the denominator only marginally and blows the value up
    CHECK(kappa_threshold(4.0, 276.1, 0.5) > 100.0);
}

TEST_CASE("large point budget") {
    LargePointBudget b = large_point_budget(0.00153, 0.000137, 0.0000684, 7.516, 276.1, 0.861);
    CHECK(b.t == 3);
    CHECK(b.s == 14);
    CHECK(b.budget == 30);
    // (kappa - 1)^3 = 276.66... clears M = 276.1
    CHECK(std::pow(6.516, 3) > 276.1);
    CHECK(std::pow(6.516, 2) < 276.1);
    CHECK_THROWS_AS(large_point_budget(0.00153, 0.000137, 0.0000684, 2.0, 10.0, 0.861),
                    numeric_error);

    // budget grows weakly with M
    LargePointBudget larger = large_point_budget(0.00153, 0.000137, 0.0000684, 7.516, 2761.0, 0.861);
    CHECK(larger.t >= b.t);
    CHECK(larger.s >= b.s);
}

TEST_CASE("repulsion margins") {
    const BigInt d(7);
    BigInt d3 = d * d * d, d5 = d3 * d * d;
    auto margins = repulsion_margins({d3, d5}, d);
    REQUIRE(margins.size() == 1);
    CHECK(margins[0] == doctest::Approx(0.0).epsilon(1e-10));

    CHECK(repulsion_margins({}, d).empty());
    CHECK(repulsion_margins({d3}, d).empty());
    auto real_margins = repulsion_margins({BigInt(294), BigInt(10000), BigInt(123456)}, BigInt(6));
    CHECK(real_margins.size() == 2);
    for (double m : real_margins) CHECK(std::isfinite(m));
    CHECK_THROWS_AS(repulsion_margins({BigInt(5), BigInt(3)}, d), domain_error);
}

TEST_CASE("conditional ceiling exponents") {
    AbcCeiling c = abc_ceiling(0.01);
    CHECK(c.exponent == doctest::Approx(2.1));
    CHECK(c.intermediate == doctest::Approx(2.0 * 1.01 / 0.97).epsilon(1e-12));
    CHECK(c.intermediate < c.exponent);
    CHECK(abc_ceiling(1e-9).exponent == doctest::Approx(2.0).epsilon(1e-6));
    for (double eps : {0.001, 0.01, 0.05, 0.066}) {
        AbcCeiling cc = abc_ceiling(eps);
        CHECK(cc.intermediate < cc.exponent);
    }
    CHECK_THROWS_AS(abc_ceiling(0.1), domain_error);
    CHECK_THROWS_AS(abc_ceiling(0.0), domain_error);
}

TEST_CASE("strong gap check") {
    CHECK(strong_gap_check(0.0, 0.0, 7.516));
    CHECK_FALSE(strong_gap_check(10.0, 60.0, 7.516));  // needs >= 63.77
    CHECK(strong_gap_check(10.0, 70.0, 7.516));
    CHECK_THROWS_AS(strong_gap_check(5.0, 3.0, 7.516), domain_error);
}

TEST_CASE("default audit passes with certificates on the tight items") {
    auto items = run_default_audit();
    REQUIRE(items.size() >= 10);
    for (const auto& it : items) {
        CAPTURE(it.name);
        CHECK(it.verdict);
    }
    int certified = 0;
    for (const auto& it : items)
        if (it.certified) ++certified;
    CHECK(certified >= 6);
}
