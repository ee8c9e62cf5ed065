#include "twistkit/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace twistkit {

namespace {

// Squares modulo m, as lookup tables.  64*63*65*11 covers enough residue
// information to reject all but ~0.8% of non-squares.
template <int M>
constexpr std::array<bool, M> square_table() {
    std::array<bool, M> t{};
    for (int i = 0; i < M; ++i) t[(i * i) % M] = true;
    return t;
}

constexpr auto kSq64 = square_table<64>();
constexpr auto kSq63 = square_table<63>();
constexpr auto kSq65 = square_table<65>();
constexpr auto kSq11 = square_table<11>();

}  // namespace

bool square_filter_u64(std::uint64_t n) {
    if (!kSq64[n & 63]) return false;
    if (!kSq63[n % 63]) return false;
    if (!kSq65[n % 65]) return false;
    return kSq11[n % 11];
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw domain_error("isqrt: negative input");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    const std::uint64_t low = mpz_get_ui(n.get_mpz_t());  // low bits suffice for mod 2^6
    if (!kSq64[low & 63]) return false;
    if (!kSq63[mpz_fdiv_ui(n.get_mpz_t(), 63)]) return false;
    if (!kSq65[mpz_fdiv_ui(n.get_mpz_t(), 65)]) return false;
    if (!kSq11[mpz_fdiv_ui(n.get_mpz_t(), 11)]) return false;
    BigInt r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return false;
    root = r;
    return true;
}

bool is_perfect_square(const BigInt& n) {
    BigInt r;
    return is_perfect_square(n, r);
}

bool is_perfect_square_u64(std::uint64_t n, std::uint64_t& root) {
    if (!square_filter_u64(n)) return false;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    constexpr std::uint64_t kMaxRoot = 4294967295ULL;
    if (r > kMaxRoot) r = kMaxRoot;
    while (r > 0 && r * r > n) --r;
    while (r < kMaxRoot && (r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return false;
    root = r;
    return true;
}

bool is_perfect_square_u128(unsigned __int128 n, std::uint64_t& root) {
    const std::uint64_t lo = static_cast<std::uint64_t>(n);
    const std::uint64_t hi = static_cast<std::uint64_t>(n >> 64);
    if (!kSq64[lo & 63]) return false;
    // 2^64 mod 63 = 16, mod 65 = 16, mod 11 = 5
    if (!kSq63[(lo % 63 + (hi % 63) * 16) % 63]) return false;
    if (!kSq65[(lo % 65 + (hi % 65) * 16) % 65]) return false;
    if (!kSq11[(lo % 11 + (hi % 11) * 5) % 11]) return false;
    auto r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(n)));
    // Correct the floating estimate, then compare exactly.
    using u128 = unsigned __int128;
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (r + 1 != 0 && static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    if (static_cast<u128>(r) * r != n) return false;
    root = r;
    return true;
}

bool is_probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

BigInt Factorization::value() const {
    BigInt v = 1;
    for (const auto& [p, e] : factors) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Pollard rho, Brent variant, with a deterministic sequence of polynomial
// increments so results are reproducible.
BigInt pollard_rho(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        BigInt diff;
        long iter = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break;  // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (++iter > 100000000) throw numeric_error("pollard_rho: giving up");
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(BigInt m, std::vector<std::pair<BigInt, unsigned>>& out) {
    if (m == 1) return;
    if (is_probable_prime(m)) {
        out.emplace_back(m, 1);
        return;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        // Find the largest k with m = b^k, then recurse on b.
        for (unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2); k >= 2; --k) {
            BigInt b;
            if (mpz_root(b.get_mpz_t(), m.get_mpz_t(), k)) {
                std::vector<std::pair<BigInt, unsigned>> base;
                factor_into(b, base);
                for (auto& [p, e] : base) out.emplace_back(p, e * k);
                return;
            }
        }
    }
    BigInt d = pollard_rho(m);
    factor_into(d, out);
    factor_into(m / d, out);
}

}  // namespace

Factorization factorize(const BigInt& n) {
    if (n < 1) throw domain_error("factorize: input must be >= 1");
    Factorization f;
    BigInt m = n;
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            f.factors.emplace_back(BigInt(p), e);
        }
        // Once m < p^2 the cofactor is prime.
        if (m > 1 && m < BigInt(p) * p) break;
    }
    if (m > 1) {
        std::vector<std::pair<BigInt, unsigned>> rest;
        factor_into(m, rest);
        // Merge duplicates coming from rho splits.
        std::sort(rest.begin(), rest.end());
        for (auto& [p, e] : rest) {
            if (!f.factors.empty() && f.factors.back().first == p)
                f.factors.back().second += e;
            else
                f.factors.emplace_back(p, e);
        }
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

int omega(const BigInt& n) { return factorize(n).omega(); }

namespace {

// Multiply `acc` by the odd-exponent primes of m.  A cofactor that is a
// perfect square contributes nothing and is dropped without factoring it;
// this is what keeps squarefree_part cheap on near-square inputs such as
// coordinates of doubled points.
void squarefree_accumulate(BigInt m, BigInt& acc) {
    if (m == 1) return;
    if (mpz_perfect_square_p(m.get_mpz_t())) return;
    if (is_probable_prime(m)) {
        acc *= m;
        return;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2); k >= 2; --k) {
            BigInt b;
            if (mpz_root(b.get_mpz_t(), m.get_mpz_t(), k)) {
                if (k % 2 == 1) squarefree_accumulate(b, acc);
                return;
            }
        }
    }
    BigInt d = pollard_rho(m);
    BigInt q = m / d;
    // The two halves may share primes; pull the gcd out until disjoint.
    BigInt g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
    if (g == 1) {
        squarefree_accumulate(d, acc);
        squarefree_accumulate(q, acc);
        return;
    }
    // Shared primes: square contributions cancel pairwise.
    squarefree_accumulate(d / g, acc);
    squarefree_accumulate(q / g, acc);
    // g^2 divides m; whatever is left of g beyond the pairing is even-fold.
}

}  // namespace

BigInt squarefree_part(const BigInt& n) {
    if (n == 0) throw domain_error("squarefree_part: zero input");
    BigInt m = abs(n);
    // Near-square inputs (coordinates of doubled points) short-circuit here.
    if (mpz_perfect_square_p(m.get_mpz_t())) return n < 0 ? BigInt(-1) : BigInt(1);
    BigInt acc = 1;
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            if (e % 2 == 1) acc *= p;
        }
        if (m > 1 && m < BigInt(p) * p) break;
    }
    squarefree_accumulate(m, acc);
    return n < 0 ? BigInt(-acc) : acc;
}

BigInt squarefree_part(const BigRat& q) {
    if (q == 0) throw domain_error("squarefree_part: zero input");
    return squarefree_part(BigInt(q.get_num() * q.get_den()));
}

double log_big(const BigInt& n) {
    if (n <= 0) throw domain_error("log_big: input must be positive");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

double log_big(const BigRat& q) {
    if (q <= 0) throw domain_error("log_big: input must be positive");
    return log_big(q.get_num()) - log_big(q.get_den());
}

}  // namespace twistkit
