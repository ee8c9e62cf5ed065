#include "twistkit/divpoly.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace twistkit {

namespace {

// Values in Q[y]/(y^2 - Y) with Y = x^3 - D^2 x: a + b*y.  Division
// polynomials evaluated at x are purely rational for odd index and a pure
// y-multiple for even index, so one of the components is always zero.
struct YExt {
    BigRat a, b;
};

class PsiTable {
  public:
    PsiTable(const Curve& c, BigRat x) : x_(std::move(x)) {
        const BigInt d2 = c.d * c.d;
        y2_ = x_ * x_ * x_ - BigRat(d2) * x_;
        const BigRat x2 = x_ * x_;
        base3_ = 3 * x2 * x2 - BigRat(6 * d2) * x2 - BigRat(d2 * d2);
        base4_ = 4 * (x2 * x2 * x2 - BigRat(5 * d2) * x2 * x2 +
                      BigRat(d2 * d2) * (BigRat(d2) - 5 * x2));
    }

    const BigRat& y_squared() const { return y2_; }

    YExt mul(const YExt& u, const YExt& v) const {
        return {u.a * v.a + u.b * v.b * y2_, u.a * v.b + u.b * v.a};
    }

    YExt psi(long m) {
        if (m < 0) {  // psi_{-m} = -psi_m
            YExt v = psi(-m);
            return {-v.a, -v.b};
        }
        if (static_cast<size_t>(m) < memo_.size() && memo_[m]) return *memo_[m];
        YExt v = compute(m);
        if (static_cast<size_t>(m) >= memo_.size()) memo_.resize(m + 1);
        memo_[m] = v;
        return v;
    }

  private:
    YExt compute(long m) {
        switch (m) {
            case 0: return {BigRat(0), BigRat(0)};
            case 1: return {BigRat(1), BigRat(0)};
            case 2: return {BigRat(0), BigRat(2)};
            case 3: return {base3_, BigRat(0)};
            case 4: return {BigRat(0), base4_};
        }
        const long h = m / 2;
        if (m % 2 == 1) {
            // psi_{2h+1} = psi_{h+2} psi_h^3 - psi_{h-1} psi_{h+1}^3
            YExt ph = psi(h), ph1 = psi(h + 1);
            YExt cube_h = mul(mul(ph, ph), ph);
            YExt cube_h1 = mul(mul(ph1, ph1), ph1);
            YExt t1 = mul(psi(h + 2), cube_h);
            YExt t2 = mul(psi(h - 1), cube_h1);
            return {t1.a - t2.a, t1.b - t2.b};
        }
        // psi_{2h} = (psi_h / 2y)(psi_{h+2} psi_{h-1}^2 - psi_{h-2} psi_{h+1}^2)
        YExt ph = psi(h), pm1 = psi(h - 1), pp1 = psi(h + 1);
        YExt t1 = mul(psi(h + 2), mul(pm1, pm1));
        YExt t2 = mul(psi(h - 2), mul(pp1, pp1));
        YExt diff{t1.a - t2.a, t1.b - t2.b};
        YExt prod = mul(ph, diff);
        // divide by 2y: (a + b y)/y = b + (a/Y) y
        if (y2_ == 0) throw domain_error("psi: even index at a 2-torsion point");
        return {prod.b / 2, prod.a / (2 * y2_)};
    }

    BigRat x_, y2_, base3_, base4_;
    std::vector<std::optional<YExt>> memo_;
};

}  // namespace

DivPolyValue psi_value(long m, const CurvePoint& p) {
    if (m < 1) throw domain_error("psi_value: m must be >= 1");
    if (p.is_infinity()) throw domain_error("psi_value: point at infinity");
    if (m % 2 == 0 && p.y() == 0)
        throw domain_error("psi_value: even index at a 2-torsion point");
    PsiTable table(p.curve(), p.x());
    YExt v = table.psi(m);
    DivPolyValue out;
    out.m = m;
    out.even = (m % 2 == 0);
    out.value = v.a + v.b * p.y();
    out.value.canonicalize();
    return out;
}

BigRat x_of_multiple(long m, const CurvePoint& p) {
    if (m < 1) throw domain_error("x_of_multiple: m must be >= 1");
    if (p.is_infinity()) throw domain_error("x_of_multiple: point at infinity");
    if (m == 1) return p.x();
    PsiTable table(p.curve(), p.x());
    YExt pm = table.psi(m);
    // psi_m^2 and psi_{m+1} psi_{m-1} are both rational
    YExt pm2 = table.mul(pm, pm);
    YExt cross = table.mul(table.psi(m + 1), table.psi(m - 1));
    if (pm2.b != 0 || cross.b != 0)
        throw invariant_error("x_of_multiple: parity structure violated");
    if (pm2.a == 0) throw domain_error("x_of_multiple: mP is the point at infinity");
    BigRat phi = p.x() * pm2.a - cross.a;
    BigRat r = phi / pm2.a;
    r.canonicalize();
    return r;
}

namespace {

// Directed-rounding interval scalars for the certified comparisons.
struct Iv {
    double lo, hi;
    static Iv point(double v) { return {v, v}; }
    Iv pad() const {
        return {std::nextafter(std::nextafter(lo, -HUGE_VAL), -HUGE_VAL),
                std::nextafter(std::nextafter(hi, HUGE_VAL), HUGE_VAL)};
    }
};

Iv iv_mul(const Iv& u, const Iv& v) {
    double c[4] = {u.lo * v.lo, u.lo * v.hi, u.hi * v.lo, u.hi * v.hi};
    Iv r{std::min(std::min(c[0], c[1]), std::min(c[2], c[3])),
         std::max(std::max(c[0], c[1]), std::max(c[2], c[3]))};
    return r.pad();
}

Iv iv_exp(const Iv& u) { return Iv{std::exp(u.lo), std::exp(u.hi)}.pad(); }

// log of a positive rational as an interval
Iv iv_log(const BigRat& q) {
    const double v = log_big(q);
    return Iv{v - 1e-12 * (1 + std::fabs(v)), v + 1e-12 * (1 + std::fabs(v))};
}

}  // namespace

bool divpoly_lower_bound_check(long m, const BigRat& x, const Curve& c, double c2) {
    if (m < 1) throw domain_error("divpoly_lower_bound_check: m must be >= 1");
    if (x <= BigRat(c.d)) throw domain_error("divpoly_lower_bound_check: requires x > D");
    if (!(c2 > 1.5 / M_LN2))
        throw domain_error("divpoly_lower_bound_check: C2 must exceed 3/(2 log 2)");
    const double logm = std::log(static_cast<double>(m));
    const double gap = log_big(x) - log_big(c.d);
    if (!(c2 * logm * logm < 2.0 * gap))
        throw domain_error("divpoly_lower_bound_check: C2 (log m)^2 < 2(log x - log D) violated");

    PsiTable table(c, x);
    YExt v = table.psi(m);

    // RHS = (1 - exp(C2 (log m)^2) (D/x)^2) * m * x^{(m^2-1)/2}; the factor
    // in front is in (0,1) under the precondition.
    Iv e = iv_exp(iv_mul(Iv::point(c2).pad(), Iv::point(logm * logm).pad()));
    const BigRat mu2 = BigRat(c.d * c.d) / (x * x);
    Iv mu2_iv{mpq_class(mu2).get_d(), mpq_class(mu2).get_d()};
    Iv prod = iv_mul(e, mu2_iv.pad());
    Iv factor{1.0 - prod.hi, 1.0 - prod.lo};
    if (factor.lo <= 0)
        throw numeric_error("divpoly_lower_bound_check: cannot certify (factor sign)");

    Iv log_rhs{std::log(static_cast<double>(m)) + std::log(factor.lo),
               std::log(static_cast<double>(m)) + std::log(factor.hi)};
    Iv logx = iv_log(x);
    const double half_exp = (static_cast<double>(m) * m - 1.0) / 2.0;
    log_rhs.lo += half_exp * logx.lo - 1e-10;
    log_rhs.hi += half_exp * logx.hi + 1e-10;

    if (m % 2 == 1) {
        if (v.a <= 0) return false;
        Iv log_lhs = iv_log(v.a);
        if (log_lhs.lo > log_rhs.hi) return true;
        if (log_lhs.hi < log_rhs.lo) return false;
    } else {
        // compare squares: psi^2 = b^2 Y exactly
        const BigRat sq = v.b * v.b * table.y_squared();
        if (sq <= 0 || v.b <= 0) return false;
        Iv log_lhs = iv_log(sq);
        Iv two_rhs{2 * log_rhs.lo, 2 * log_rhs.hi};
        if (log_lhs.lo > two_rhs.hi) return true;
        if (log_lhs.hi < two_rhs.lo) return false;
    }
    throw numeric_error("divpoly_lower_bound_check: intervals overlap, cannot certify");
}

bool divpoly_lower_bound_check(long m, const CurvePoint& p, double c2) {
    if (p.is_infinity()) throw domain_error("divpoly_lower_bound_check: point at infinity");
    return divpoly_lower_bound_check(m, p.x(), p.curve(), c2);
}

std::vector<MultipleVerdict> small_multiple_filter(const CurvePoint& p, long m_max) {
    if (!p.is_integral()) throw domain_error("small_multiple_filter: requires integral point");
    if (p.x() <= BigRat(p.curve().d))
        throw domain_error("small_multiple_filter: requires x > D");

    std::vector<MultipleVerdict> out;
    PsiTable table(p.curve(), p.x());
    const BigInt twod = 2 * p.curve().d;
    for (long m = 3; m <= m_max; m += 2) {
        MultipleVerdict v;
        v.m = m;
        YExt psi = table.psi(m);
        if (psi.b != 0) throw invariant_error("small_multiple_filter: odd psi not rational");
        // |psi_m(x)|^4 > (2D)^{3 m^2}  <=>  psi exceeds (2D)^{(3/4) m^2}
        BigInt psi_int = num(psi.a);
        if (den(psi.a) != 1) throw invariant_error("small_multiple_filter: psi not integral");
        BigInt lhs = abs(psi_int);
        lhs = lhs * lhs;
        lhs = lhs * lhs;
        BigInt rhs;
        mpz_pow_ui(rhs.get_mpz_t(), twod.get_mpz_t(), static_cast<unsigned long>(3 * m * m));
        v.excluded_by_bound = lhs > rhs;
        if (psi.a == 0) {
            v.integral = false;  // mP is the point at infinity
        } else {
            v.integral = den(x_of_multiple(m, p)) == 1;
        }
        if (v.excluded_by_bound && v.integral)
            throw invariant_error("small_multiple_filter: bound contradicted by exact check");
        out.push_back(v);
    }
    return out;
}

}  // namespace twistkit
