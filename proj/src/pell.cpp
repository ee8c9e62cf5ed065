#include "twistkit/pell.hpp"

#include "twistkit/point_search.hpp"

namespace twistkit {

PellFundamental pell_fundamental(const BigInt& d) {
    if (d < 2 || is_perfect_square(d))
        throw domain_error("pell_fundamental: d must be a non-square >= 2");

    // Continued fraction of sqrt(d) by the exact (m, q) recurrence; the
    // first convergent h/k with h^2 - d k^2 = 1 is the fundamental solution
    // (it appears at the end of the first period, or the second when the
    // period is odd).
    const BigInt a0 = isqrt(d);
    BigInt m = 0, q = 1, a = a0;
    BigInt h_prev = 1, h = a0, k_prev = 0, k = 1;
    while (h * h - d * k * k != 1) {
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
    }
    return {d, h, k};
}

std::optional<DoublePellSolution> solve_double_pell(const BigInt& d) {
    if (d < 1) throw domain_error("solve_double_pell: d must be positive");
    if (squarefree_part(d) != d) throw domain_error("solve_double_pell: d must be squarefree");
    if (d == 1 || is_perfect_square(d)) return std::nullopt;  // v^2 - d u^2 = 1 degenerate
    PellFundamental f = pell_fundamental(d);
    BigInt s2 = 2 * f.v * f.v - 1;
    BigInt s;
    if (!is_perfect_square(s2, s)) return std::nullopt;
    // s^2 - 1 = 2(v^2 - 1) = 2 d u^2 follows from the Pell equation
    DoublePellSolution sol{s, f.u, f.v};
    if (sol.s * sol.s - 1 != 2 * d * sol.u * sol.u)
        throw invariant_error("solve_double_pell: consistency check failed");
    return sol;
}

std::vector<DoublePellSolution> double_pell_family_search(const BigInt& d, int k_max) {
    if (d < 1) throw domain_error("double_pell_family_search: d must be positive");
    std::vector<DoublePellSolution> out;
    // s_k from s^2 - 2 w^2 = -1: (s, w) = (1, 1), then (s, w) <- (3s + 4w, 2s + 3w)
    BigInt s = 1, w = 1;
    for (int k = 1; k <= k_max; k += 2) {
        if (s > 1) {
            BigInt u2 = (s * s - 1) / (2 * d);
            if ((s * s - 1) % (2 * d) == 0) {
                BigInt u;
                if (is_perfect_square(u2, u)) out.push_back({s, u, w});
            }
        }
        BigInt s_next = 3 * s + 4 * w;
        BigInt w_next = 2 * s + 3 * w;
        s = s_next;
        w = w_next;
    }
    return out;
}

std::optional<CurvePoint> ptors_extra(const BigInt& d) {
    auto sol = solve_double_pell(d);
    if (!sol) return std::nullopt;
    Curve c(d);
    BigInt x = d * sol->s * sol->s;
    BigInt y2_num = x * x * x - d * d * x;
    BigInt y;
    if (!is_perfect_square(y2_num, y))
        throw invariant_error("ptors_extra: candidate x is not on the curve");
    CurvePoint p(c, BigRat(x), BigRat(y));
    CurvePoint t(c, BigRat(d), BigRat(0));
    if (!same_coset(p, t))
        throw invariant_error("ptors_extra: candidate not in the coset of (D,0)");
    return p;
}

TorsionCosetAudit torsion_coset_audit(const BigInt& d, const BigInt& x_max) {
    if (d < 1 || squarefree_part(d) != d)
        throw domain_error("torsion_coset_audit: d must be squarefree positive");
    TorsionCosetAudit audit;
    audit.d = d;
    audit.x_max = x_max;

    Curve c(d);
    const SquareClassTriple id_triple{1, 1, 1};
    const SquareClassTriple zero_triple = descent_triple(CurvePoint(c, BigRat(0), BigRat(0)));
    const SquareClassTriple neg_triple = descent_triple(CurvePoint(c, BigRat(-d), BigRat(0)));
    const SquareClassTriple pos_triple = descent_triple(CurvePoint(c, BigRat(d), BigRat(0)));

    std::vector<BigInt> pos_coset_xs;
    for (const auto& rec : enumerate_integral_points(d, x_max)) {
        if (rec.y == 0) continue;  // torsion
        if (rec.coset_key == id_triple)
            audit.violations.push_back("non-torsion point with identity descent image at x=" +
                                       rec.x.get_str());
        if (rec.coset_key == zero_triple)
            audit.violations.push_back("non-torsion point in the coset of (0,0) at x=" +
                                       rec.x.get_str());
        if (rec.coset_key == neg_triple)
            audit.violations.push_back("non-torsion point in the coset of (-D,0) at x=" +
                                       rec.x.get_str());
        if (rec.coset_key == pos_triple) pos_coset_xs.push_back(rec.x);
    }

    if (pos_coset_xs.size() > 1)
        audit.violations.push_back("more than one non-torsion pair in the coset of (D,0)");
    if (!pos_coset_xs.empty()) audit.extra_pair_x = pos_coset_xs.front();

    auto predicted = ptors_extra(d);
    if (predicted) {
        audit.predicted_extra_x = num(predicted->x());
        if (*audit.predicted_extra_x <= x_max) {
            if (pos_coset_xs.empty())
                audit.violations.push_back("Pell route predicts a pair the enumeration missed");
            else if (pos_coset_xs.front() != *audit.predicted_extra_x)
                audit.violations.push_back("Pell route and enumeration disagree on x");
        }
    } else if (!pos_coset_xs.empty()) {
        audit.violations.push_back("enumeration found a pair the Pell route excludes");
    }

    audit.ok = audit.violations.empty();
    return audit;
}

}  // namespace twistkit
