#include <random>

#include "doctest.h"
#include "twistkit/exact.hpp"

using namespace twistkit;

TEST_CASE("isqrt basics") {
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(1)) == 1);
    // (-98)^3 + 1254^2 * 98 = 153165376 = 12376^2
    CHECK(isqrt(BigInt(153165376)) == 12376);
    // 197^2 = 38809 <= 39168 < 39204 = 198^2
    CHECK(isqrt(BigInt(39168)) == 197);
    CHECK_THROWS_AS(isqrt(BigInt(-1)), domain_error);
}

TEST_CASE("isqrt bracket property on random 64-bit inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        BigInt n(static_cast<unsigned long>(rng() >> (i % 40)));
        BigInt r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("perfect square detection") {
    BigInt root;
    CHECK(is_perfect_square(BigInt(0)));
    CHECK(is_perfect_square(BigInt(25401600), root));
    CHECK(root == 5040);
    CHECK_FALSE(is_perfect_square(BigInt(25401601)));
    CHECK_FALSE(is_perfect_square(BigInt(-4)));

    std::uint64_t r64 = 0;
    CHECK(is_perfect_square_u64(0, r64));
    CHECK(is_perfect_square_u64(4294836225ULL, r64));  // 65535^2
    CHECK(r64 == 65535);
    const std::uint64_t big = 4294967295ULL * 4294967295ULL;  // (2^32-1)^2
    CHECK(is_perfect_square_u64(big, r64));
    CHECK(r64 == 4294967295ULL);
    CHECK_FALSE(is_perfect_square_u64(big - 1, r64));
    CHECK_FALSE(is_perfect_square_u64(~0ULL, r64));

    unsigned __int128 n128 = static_cast<unsigned __int128>(123456789123ULL);
    n128 *= 123456789123ULL;
    CHECK(is_perfect_square_u128(n128, r64));
    CHECK(r64 == 123456789123ULL);
    CHECK_FALSE(is_perfect_square_u128(n128 + 2, r64));
}

TEST_CASE("perfect square agreement between filter paths") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 5000; ++i) {
        const std::uint64_t n = rng() >> 12;
        std::uint64_t r = 0;
        const bool fast = is_perfect_square_u64(n, r);
        const bool exact = is_perfect_square(BigInt(static_cast<unsigned long>(n)));
        CHECK(fast == exact);
        if (fast) CHECK(BigInt(static_cast<unsigned long>(r)) * r == n);
    }
}

TEST_CASE("u128 square detection agrees with the GMP route") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 5000; ++i) {
        unsigned __int128 n = rng();
        n = (n << 64) | rng();
        n >>= (i % 100);  // spread across magnitudes
        if (i % 3 == 0) {  // plant squares
            const std::uint64_t s = rng() >> (1 + i % 32);
            n = static_cast<unsigned __int128>(s) * s;
        }
        std::uint64_t root = 0;
        const bool fast = is_perfect_square_u128(n, root);
        BigInt big;
        mpz_import(big.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
        BigInt bigroot;
        const bool exact = is_perfect_square(big, bigroot);
        CHECK(fast == exact);
        if (fast) CHECK(BigInt(bigroot) == BigInt(static_cast<unsigned long>(root)));
    }
}

TEST_CASE("squarefree_part examples") {
    CHECK(squarefree_part(BigInt(-98)) == -2);  // -2 * 7^2
    CHECK(squarefree_part(BigInt(288)) == 2);   // 2 * 12^2
    CHECK(squarefree_part(BigInt(7)) == 7);
    CHECK(squarefree_part(BigInt(1)) == 1);
    CHECK(squarefree_part(BigInt(-1)) == -1);
    CHECK_THROWS_AS(squarefree_part(BigInt(0)), domain_error);
}

TEST_CASE("squarefree_part is square-class invariant") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        long n = static_cast<long>(rng() % 10000) - 5000;
        long k = 1 + static_cast<long>(rng() % 50);
        if (n == 0) n = 17;
        CHECK(squarefree_part(BigInt(BigInt(n) * k * k)) == squarefree_part(BigInt(n)));
    }
    // rational class representative: numerator * denominator
    CHECK(squarefree_part(make_rat(25, 4)) == 1);
    CHECK(squarefree_part(make_rat(-3, 2)) == -6);
}

TEST_CASE("squarefree_part handles large near-square inputs") {
    BigInt p("1000000000000066600000000000001");  // large prime-ish value
    CHECK(squarefree_part(BigInt(p * p)) == 1);
    CHECK(squarefree_part(BigInt(p * p * 2)) == 2);
}

TEST_CASE("factorize examples") {
    Factorization f1 = factorize(BigInt(1));
    CHECK(f1.omega() == 0);
    CHECK(f1.value() == 1);

    Factorization f6 = factorize(BigInt(6));
    CHECK(f6.omega() == 2);
    REQUIRE(f6.factors.size() == 2);
    CHECK(f6.factors[0].first == 2);
    CHECK(f6.factors[1].first == 3);

    Factorization f = factorize(BigInt(7585));  // 5 * 37 * 41
    CHECK(f.omega() == 3);
    CHECK(f.factors[0].first == 5);
    CHECK(f.factors[1].first == 37);
    CHECK(f.factors[2].first == 41);
    CHECK_THROWS_AS(factorize(BigInt(0)), domain_error);
}

TEST_CASE("factorize reconstructs its input") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 200; ++i) {
        BigInt n(1 + static_cast<unsigned long>(rng() % 100000000));
        Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (size_t j = 0; j + 1 < f.factors.size(); ++j)
            CHECK(f.factors[j].first < f.factors[j + 1].first);
    }
    // beyond the trial-division bound: rho path
    BigInt n = BigInt(1000003) * 1000033 * 4;
    Factorization f = factorize(n);
    CHECK(f.value() == n);
    CHECK(f.omega() == 3);
}

TEST_CASE("decimal string round trip") {
    BigInt a("-123456789012345678901234567890123456789");
    CHECK(BigInt(a.get_str()) == a);
    CHECK(BigInt("0").get_str() == "0");
}

TEST_CASE("log_big accuracy") {
    CHECK(log_big(BigInt(294)) == doctest::Approx(std::log(294.0)).epsilon(1e-14));
    BigInt big = BigInt(10);
    mpz_pow_ui(big.get_mpz_t(), big.get_mpz_t(), 100);
    CHECK(log_big(big) == doctest::Approx(100 * std::log(10.0)).epsilon(1e-14));
    CHECK(log_big(make_rat(25, 4)) ==
          doctest::Approx(std::log(6.25)).epsilon(1e-14));
}
