#include "twistkit/simpell.hpp"

#include <cmath>

namespace twistkit {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

SimPellInstance::SimPellInstance(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw domain_error("SimPellInstance: parameters must be positive");
    const BigInt* v[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (gcd(*v[i], *v[j]) != 1)
                throw domain_error("SimPellInstance: parameters must be pairwise coprime");
}

std::vector<SimPellSolution> brute_count(const SimPellInstance& inst, const BigInt& limit) {
    if (limit < 1) throw domain_error("brute_count: limit must be >= 1");
    std::vector<SimPellSolution> out;
    for (BigInt y = 1; y <= limit; ++y) {
        const BigInt by2 = inst.b * y * y;
        // a X^2 = b Y^2 + d
        const BigInt ax2 = by2 + inst.d;
        if (ax2 % inst.a != 0) continue;
        BigInt x;
        if (!is_perfect_square(ax2 / inst.a, x)) continue;
        if (x < 1 || x > limit) continue;
        // c Z^2 = b Y^2 - d
        const BigInt cz2 = by2 - inst.d;
        if (cz2 <= 0 || cz2 % inst.c != 0) continue;
        BigInt z;
        if (!is_perfect_square(cz2 / inst.c, z)) continue;
        if (z < 1 || z > limit) continue;
        out.push_back({x, y, z});
    }
    return out;
}

CurvePoint curve_lift(const SimPellInstance& inst, const SimPellSolution& sol) {
    const BigInt &a = inst.a, &b = inst.b, &c = inst.c, &d = inst.d;
    const BigInt &x = sol.x, &y = sol.y, &z = sol.z;
    if (x < 1 || y < 1 || z < 1 || a * x * x - b * y * y != d || b * y * y - c * z * z != d)
        throw domain_error("curve_lift: not a solution of the instance");

    const BigInt big_d = inst.curve_d();
    Curve curve(big_d);
    const BigInt px = a * c * b * b * y * y;
    const BigInt py = a * a * b * b * c * c * x * y * z;
    CurvePoint p(curve, BigRat(px), BigRat(py));  // on-curve verified

    if (px - big_d != a * b * c * c * z * z || px + big_d != b * c * a * a * x * x)
        throw invariant_error("curve_lift: x -+ D split failed");
    const SquareClassTriple expect{squarefree_part(BigInt(a * b)), squarefree_part(BigInt(a * c)),
                                   squarefree_part(BigInt(b * c))};
    if (descent_triple(p) != expect)
        throw invariant_error("curve_lift: descent image mismatch");
    return p;
}

double solution_bound(const SimPellInstance& inst, std::optional<int> rank) {
    if (rank) {
        if (*rank < 0) throw domain_error("solution_bound: rank must be >= 0");
        const double r = *rank;
        return 15.0 + std::exp((r + 19.0 * std::cbrt(r)) * std::log(1.89));
    }
    const double w = omega(inst.curve_d());
    return 15.0 + std::exp((w + 12.0 * std::cbrt(w)) * std::log(3.58));
}

std::vector<QuarticReduction> quartic_reduce(const BigInt& a, const BigInt& b, const BigInt& c,
                                             const BigInt& x, const BigInt& y) {
    if (a < 1 || b < 1 || c < 1) throw domain_error("quartic_reduce: A, B, C must be positive");
    if (squarefree_part(a) != a || squarefree_part(b) != b || squarefree_part(c) != c)
        throw domain_error("quartic_reduce: A, B, C must be squarefree");
    if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
        throw domain_error("quartic_reduce: A, B, C must be pairwise coprime");
    if (x < 1 || y < 1) throw domain_error("quartic_reduce: X, Y must be positive");
    if (a * a * x * x * x * x - b * y * y != c * c)
        throw domain_error("quartic_reduce: (X, Y) does not solve A^2 X^4 - B Y^2 = C^2");

    QuarticReduction red;
    red.g = gcd(x, c);
    const BigInt w = x / red.g;
    const BigInt core = a * red.g * w * w;
    const BigInt cg = c / red.g;
    red.lhs_minus = core - cg;
    red.lhs_plus = core + cg;
    if (red.lhs_minus <= 0)
        throw domain_error("quartic_reduce: degenerate factor A g (X/g)^2 = C/g");

    red.b1 = squarefree_part(red.lhs_minus);
    red.y1 = isqrt(red.lhs_minus / red.b1);
    red.b2 = squarefree_part(red.lhs_plus);
    red.y2 = isqrt(red.lhs_plus / red.b2);
    if (red.b1 * red.y1 * red.y1 != red.lhs_minus || red.b2 * red.y2 * red.y2 != red.lhs_plus)
        throw invariant_error("quartic_reduce: squarefree split failed");

    const BigInt prod = red.b1 * red.b2;
    if (prod == b)
        red.b_multiplier = 1;
    else if (prod == 4 * b)
        red.b_multiplier = 4;
    else
        throw invariant_error("quartic_reduce: B1 B2 is neither B nor 4B");

    // product identity: (B1 Y1^2)(B2 Y2^2) = B (Y/g)^2
    if (red.lhs_minus * red.lhs_plus * red.g * red.g != b * y * y)
        throw invariant_error("quartic_reduce: product identity failed");

    // gcd of the two factors is 1 or 2
    const BigInt common = gcd(red.lhs_minus, red.lhs_plus);
    if (common != 1 && common != 2)
        throw invariant_error("quartic_reduce: factors share more than 2");

    // The derived pair reads as a simultaneous Pell system
    //   B2 Y2^2 - (Ag) W^2 = C/g,  (Ag) W^2 - B1 Y1^2 = C/g
    // when its parameters happen to be pairwise coprime.
    const BigInt ag = a * red.g;
    const BigInt params[4] = {red.b2, ag, red.b1, cg};
    bool coprime = true;
    for (int i = 0; i < 4 && coprime; ++i)
        for (int j = i + 1; j < 4 && coprime; ++j)
            if (gcd(params[i], params[j]) != 1) coprime = false;
    if (coprime) red.induced = SimPellInstance(red.b2, ag, red.b1, cg);

    return {red};
}

}  // namespace twistkit
