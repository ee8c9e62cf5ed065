#ifndef TWISTKIT_HEIGHTS_HPP
#define TWISTKIT_HEIGHTS_HPP

// Weil and canonical heights on E_D(Q) with certified error radii, plus
// validators for the explicit height-gap envelopes.
//
// Normalization: hhat(P) = lim h(2^n P) / 4^n, with no extra factor 1/2.
// Libraries that divide by 2 report half of these values.

#include <map>
#include <string>

#include "twistkit/curve.hpp"

namespace twistkit {

inline constexpr double kDefaultHeightTol = 1e-9;

struct HeightReport {
    double weil = 0.0;
    double canonical = 0.0;
    double error_radius = 0.0;
    std::map<std::string, bool> envelope_verdicts;

    bool all_pass() const {
        for (const auto& [name, ok] : envelope_verdicts)
            if (!ok) return false;
        return true;
    }
};

// h(x) = log max(|numerator|, denominator).
double weil_height(const BigRat& x);

// h(P) = h(x(P)); the point at infinity has height 0.
double weil_height(const CurvePoint& p);

// Canonical height with |canonical - hhat(P)| <= error_radius <= tol.
//
// The series h(2^n P)/4^n is telescoped: the first two doublings are done
// in exact arithmetic (they absorb every gcd and 2-adic correction), after
// which only t_n = D / x(2^n P) in (0,1) is tracked in floating point via
//   t_{n+1} = 4 t_n (1 - t_n^2) / (1 + t_n^2)^2,
// each step contributing 4^{-n} * log(1 + t_n^2) / 2.  The truncated tail
// is certified by 4^{-n} (log D + 4.6).  Points with -D <= x <= 0 are first
// doubled exactly (quadraticity gives the factor 1/4); torsion maps to 0.
HeightReport canonical_height(const CurvePoint& p, double tol = kDefaultHeightTol);

// Evaluates every applicable height inequality for a non-torsion rational
// point and records pass/fail verdicts:
//   gap_envelope_positive_x : hhat - h in [-log g - 2 log 2, -log g + (2/3) log 2]
//                             for x = r/s >= D, g = gcd(r, D)
//   gap_envelope_negative_x : hhat - h in log(D/g) - log+|x| + [-2 log 2, (2/3) log 2]
//                             for -D <= x < 0
//   double_height_envelope  : 4 hhat(P) - h(2P) in [-2 log 2, (2/3) log 2]
//   double_height_lower     : hhat(2P) >= log D - 2 log 2
//   lang_lower              : hhat(P) >= (1/4) log D - (1/2) log 2
HeightReport height_gap_report(const CurvePoint& p, double tol = kDefaultHeightTol);

}  // namespace twistkit

#endif
