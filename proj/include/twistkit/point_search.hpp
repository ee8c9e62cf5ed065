#ifndef TWISTKIT_POINT_SEARCH_HPP
#define TWISTKIT_POINT_SEARCH_HPP

// Exhaustive integral-point enumeration per curve, coset classification,
// family scans over D, and the per-coset count-bound evaluators.

#include <optional>
#include <vector>

#include "twistkit/curve.hpp"

namespace twistkit {

// Small/large split exponent: x is "large" when x > D^{2(1+eps)}.
inline constexpr double kSizeClassEps = 0.00153;

struct IntegralPointRecord {
    BigInt d;
    BigInt x;
    BigInt y;  // canonical representative y >= 0; the pair (x, -y) is implied
    SquareClassTriple coset_key;
    bool large = false;

    CurvePoint point() const { return CurvePoint(Curve(d), BigRat(x), BigRat(y)); }
};

// All integral (x, y) with -D <= x <= 0 or D <= x <= x_max and x^3 - D^2 x a
// perfect square, in ascending x order, one record per +-pair.  The negative
// range is complete unconditionally; the positive range is complete up to
// x_max.  Values are tested through the quadratic-residue filter first, so
// the loop stays cheap; exact root extraction certifies every hit.
std::vector<IntegralPointRecord> enumerate_integral_points(const BigInt& d,
                                                           const BigInt& x_max,
                                                           double eps = kSizeClassEps);

// Complete enumeration of the integral points in the coset of (D, 0) up to
// x_max: an integral x in that coset has squarefree part D, i.e. x = D t^2,
// so only ~sqrt(x_max / D) candidates exist.
std::vector<IntegralPointRecord> enumerate_pell_coset(const BigInt& d, const BigInt& x_max);

struct CosetReport {
    IntegralPointRecord representative;  // member with smallest |x|
    std::vector<IntegralPointRecord> members;
    int pair_count = 0;           // members with y > 0, each counting +-P once
    int negative_pair_count = 0;  // pairs with -D < x < 0
    bool exceeds_torsion_allowance = false;  // torsion coset holding more than classified
    bool exceptional = false;                // two or more negative-x pairs
};

// Groups records from one curve by descent image; reports are ordered by the
// representative's x.
std::vector<CosetReport> classify_cosets(const std::vector<IntegralPointRecord>& records);

struct ScanOptions {
    bool negative_only = true;      // the family scan needs only -D < x < 0
    double positive_exponent = 2.02;  // x_max = ceil(D^e) when scanning positives
    int jobs = 0;                     // 0 = hardware parallelism
};

struct ScanRecord {
    BigInt d;
    int pairs = 0;   // non-torsion pairs found
    int cosets = 0;  // distinct cosets among found points
    bool exceptional = false;
    std::vector<IntegralPointRecord> exceptional_members;
};

struct ScanReport {
    BigInt d_from, d_to;
    bool negative_only = true;
    std::vector<ScanRecord> per_d;  // squarefree D ascending
    std::vector<BigInt> exceptional_ds;
};

// Scans every squarefree D in [d_from, d_to].  Work is distributed over
// disjoint D-blocks; the merged report is identical for any worker count.
ScanReport scan_family(const BigInt& d_from, const BigInt& d_to, const ScanOptions& opt = {});

struct CosetCountBound {
    double per_coset;  // 30 + 1.89^{r + 19 r^{1/3}}
    double total;      // 2^{2+r} times the above
};

CosetCountBound coset_count_bound(int rank);

}  // namespace twistkit

#endif
