#include <cmath>

#include <set>

#include "doctest.h"
#include "twistkit/heights.hpp"
#include "twistkit/point_search.hpp"

using namespace twistkit;

TEST_CASE("enumeration examples") {
    auto recs = enumerate_integral_points(BigInt(6), BigInt(1000000));
    std::set<long> xs;
    for (const auto& r : recs) xs.insert(r.x.get_si());
    CHECK(xs == std::set<long>{-6, -3, -2, 0, 6, 12, 18, 294});

    auto recs1254 = enumerate_integral_points(BigInt(1254), BigInt(1000000));
    bool has98 = false, has1058 = false;
    for (const auto& r : recs1254) {
        if (r.x == -98 && r.y == 12376) has98 = true;
        if (r.x == -1058 && r.y == 21896) has1058 = true;
    }
    CHECK(has98);
    CHECK(has1058);

    auto recs1 = enumerate_integral_points(BigInt(1), BigInt(1000));
    std::set<long> xs1;
    for (const auto& r : recs1) xs1.insert(r.x.get_si());
    CHECK(xs1 == std::set<long>{-1, 0, 1});

    CHECK_THROWS_AS(enumerate_integral_points(BigInt(6), BigInt(2)), domain_error);
}

TEST_CASE("records are on-curve, ordered, with canonical y") {
    auto recs = enumerate_integral_points(BigInt(34), BigInt(100000));
    for (size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].y >= 0);
        CHECK(recs[i].x * recs[i].x * recs[i].x - 34 * 34 * recs[i].x ==
              recs[i].y * recs[i].y);
        if (i > 0) CHECK(recs[i - 1].x < recs[i].x);
    }
}

TEST_CASE("enumerated non-torsion points satisfy the height envelopes") {
    for (long d : {5L, 6L, 14L, 34L, 41L}) {
        for (const auto& rec : enumerate_integral_points(BigInt(d), BigInt(200000))) {
            if (rec.y == 0) continue;
            CHECK(height_gap_report(rec.point()).all_pass());
        }
    }
}

TEST_CASE("coset classification of E_6") {
    auto reports = classify_cosets(enumerate_integral_points(BigInt(6), BigInt(1000000)));
    REQUIRE(reports.size() == 7);
    // ordered by representative x: -6, -3, -2, 0, 6, 12, 18
    CHECK(reports[0].representative.x == -6);
    CHECK(reports[1].representative.x == -3);
    CHECK(reports[2].representative.x == -2);
    CHECK(reports[3].representative.x == 0);
    CHECK(reports[4].representative.x == 6);
    CHECK(reports[5].representative.x == 12);
    CHECK(reports[6].representative.x == 18);
    // the (6,0) coset also holds (294, +-5040)
    REQUIRE(reports[4].members.size() == 2);
    CHECK(reports[4].members[1].x == 294);
    CHECK(reports[4].pair_count == 1);
    CHECK_FALSE(reports[4].exceeds_torsion_allowance);
    for (const auto& r : reports) CHECK_FALSE(r.exceptional);

    CHECK(classify_cosets({}).empty());
}

TEST_CASE("exceptional coset detection on E_1254") {
    auto reports = classify_cosets(enumerate_integral_points(BigInt(1254), BigInt(1254)));
    bool found = false;
    for (const auto& r : reports) {
        if (r.exceptional) {
            found = true;
            CHECK(r.negative_pair_count == 2);
            REQUIRE(r.members.size() == 2);
            CHECK(r.members[0].x == -1058);
            CHECK(r.members[1].x == -98);
        }
    }
    CHECK(found);
}

TEST_CASE("pell coset enumeration matches the general scan") {
    auto coset = enumerate_pell_coset(BigInt(6), BigInt(100000000));
    REQUIRE(coset.size() == 2);
    CHECK(coset[0].x == 6);
    CHECK(coset[1].x == 294);
    CHECK(coset[1].y == 5040);

    // cross-check against the full enumeration on the overlap
    auto full = classify_cosets(enumerate_integral_points(BigInt(6), BigInt(1000000)));
    for (const auto& rep : full) {
        if (rep.representative.x == 6) {
            REQUIRE(rep.members.size() == 2);
            CHECK(rep.members[1].x == coset[1].x);
        }
    }
}

TEST_CASE("size classes split at the squared-plus-epsilon threshold") {
    auto recs = enumerate_integral_points(BigInt(5), BigInt(100000));
    for (const auto& r : recs) {
        if (r.x <= 25) CHECK_FALSE(r.large);
    }
    // synthetic check of the threshold arithmetic
    auto big = enumerate_integral_points(BigInt(2), BigInt(10000));
    for (const auto& r : big)
        if (r.x > 16) CHECK(r.large);  // 2^{2(1+eps)} is barely above 4
}

TEST_CASE("filtered enumeration agrees with a naive square test") {
    // independent oracle: plain GMP square detection, no residue tracking
    for (long d : {2L, 5L, 6L, 34L}) {
        auto recs = enumerate_integral_points(BigInt(d), BigInt(5000));
        std::vector<std::pair<long, long>> naive;
        for (long x = -d; x <= 5000; ++x) {
            if (x > 0 && x < d) continue;
            BigInt v = BigInt(x) * x * x - BigInt(d) * d * x;
            if (v < 0) continue;
            BigInt root;
            mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
            if (root * root == v) naive.emplace_back(x, root.get_si());
        }
        REQUIRE(recs.size() == naive.size());
        for (size_t i = 0; i < recs.size(); ++i) {
            CHECK(recs[i].x == naive[i].first);
            CHECK(recs[i].y == naive[i].second);
        }
    }
}

TEST_CASE("scan guards") {
    CHECK_THROWS_AS(scan_family(BigInt(1), BigInt(3000000)), domain_error);
    CHECK_THROWS_AS(scan_family(BigInt(0), BigInt(10)), domain_error);
    CHECK_THROWS_AS(enumerate_integral_points(BigInt(6), BigInt(100), -0.5), domain_error);
}

TEST_CASE("family scan basics") {
    ScanReport empty = scan_family(BigInt(10), BigInt(5));
    CHECK(empty.per_d.empty());

    ScanReport r100 = scan_family(BigInt(1), BigInt(100));
    CHECK(r100.exceptional_ds.empty());
    // squarefree count below 100
    CHECK(r100.per_d.size() == 61);
    for (const auto& rec : r100.per_d) CHECK(squarefree_part(rec.d) == rec.d);
}

TEST_CASE("family scan is deterministic across worker counts") {
    ScanOptions one;
    one.jobs = 1;
    ScanOptions four;
    four.jobs = 4;
    ScanReport a = scan_family(BigInt(1200), BigInt(1300), one);
    ScanReport b = scan_family(BigInt(1200), BigInt(1300), four);
    REQUIRE(a.per_d.size() == b.per_d.size());
    for (size_t i = 0; i < a.per_d.size(); ++i) {
        CHECK(a.per_d[i].d == b.per_d[i].d);
        CHECK(a.per_d[i].pairs == b.per_d[i].pairs);
        CHECK(a.per_d[i].cosets == b.per_d[i].cosets);
        CHECK(a.per_d[i].exceptional == b.per_d[i].exceptional);
    }
    CHECK(a.exceptional_ds == b.exceptional_ds);
    REQUIRE(a.exceptional_ds.size() == 1);
    CHECK(a.exceptional_ds[0] == 1254);
}

TEST_CASE("coset count bound evaluator") {
    CosetCountBound b0 = coset_count_bound(0);
    CHECK(b0.per_coset == doctest::Approx(31.0));
    CHECK(b0.total == doctest::Approx(124.0));
    CosetCountBound b1 = coset_count_bound(1);
    CHECK(b1.per_coset == doctest::Approx(30.0 + std::pow(1.89, 20.0)).epsilon(1e-9));
    double prev = b0.per_coset;
    for (int r = 1; r <= 12; ++r) {
        CosetCountBound b = coset_count_bound(r);
        CHECK(b.per_coset > prev);
        CHECK(b.total == doctest::Approx(std::exp2(2.0 + r) * b.per_coset).epsilon(1e-12));
        prev = b.per_coset;
    }
    CHECK_THROWS_AS(coset_count_bound(-1), domain_error);
}
