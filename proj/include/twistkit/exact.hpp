#ifndef TWISTKIT_EXACT_HPP
#define TWISTKIT_EXACT_HPP

// Exact integer/rational arithmetic shared by every module, on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "twistkit/errors.hpp"

namespace twistkit {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Reduced rational with positive denominator.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline const BigInt& num(const BigRat& q) { return q.get_num(); }
inline const BigInt& den(const BigRat& q) { return q.get_den(); }

// Floor square root of a non-negative integer: r*r <= n < (r+1)*(r+1).
BigInt isqrt(const BigInt& n);

// Perfect-square test.  A quadratic-residue filter modulo 64, 63, 65 and 11
// rejects ~99% of non-squares before the exact root extraction; the point
// scans call this in their hot loop.
bool is_perfect_square(const BigInt& n);
bool is_perfect_square(const BigInt& n, BigInt& root);

// uint64/uint128 fast paths used by the scan loops.
bool is_perfect_square_u64(std::uint64_t n, std::uint64_t& root);
bool is_perfect_square_u128(unsigned __int128 n, std::uint64_t& root);

// Residue filter alone (no root extraction); true means "might be a square".
bool square_filter_u64(std::uint64_t n);

// Prime factorization, primes strictly increasing.
struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> factors;

    int omega() const { return static_cast<int>(factors.size()); }
    BigInt value() const;  // product of prime powers
};

// Full factorization: trial division up to 10^6, then perfect-power
// detection and Pollard rho (Brent variant, fixed seed sequence) on what
// remains.  Input must be >= 1.
Factorization factorize(const BigInt& n);

// Number of distinct prime factors of n >= 1.
int omega(const BigInt& n);

// The squarefree d with n = d * m^2, sign preserved.  Does not need a full
// factorization: square cofactors are recognized and dropped wholesale.
BigInt squarefree_part(const BigInt& n);

// Square class of a rational r/s, represented by squarefree_part(r*s).
BigInt squarefree_part(const BigRat& q);

// log of a positive BigInt / BigRat, accurate to ~1 ulp of double.
double log_big(const BigInt& n);
double log_big(const BigRat& q);

// Deterministic ~64-bit Miller-Rabin based primality check (GMP).
bool is_probable_prime(const BigInt& n);

}  // namespace twistkit

#endif
