#include "twistkit/curve.hpp"

#include <sstream>

namespace twistkit {

std::string SquareClassTriple::str() const {
    std::ostringstream os;
    os << "(" << c1 << "," << c2 << "," << c3 << ")";
    return os.str();
}

std::string CurvePoint::str() const {
    std::ostringstream os;
    if (infinity_) {
        os << "O[D=" << curve_.d << "]";
    } else {
        os << "(" << x_ << "," << y_ << ")[D=" << curve_.d << "]";
    }
    return os.str();
}

CurvePoint negate(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint(p.curve(), p.x(), -p.y());
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
    if (p.curve() != q.curve()) throw domain_error("add: points on different curves");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    const Curve& c = p.curve();
    const BigRat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();

    BigRat lambda;
    if (x1 == x2) {
        if (y1 != y2 || y1 == 0) return CurvePoint::infinity(c);  // P + (-P), 2-torsion
        // tangent slope (3x^2 - D^2) / (2y)
        lambda = (3 * x1 * x1 - BigRat(c.d * c.d)) / (2 * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    BigRat x3 = lambda * lambda - x1 - x2;
    BigRat y3 = lambda * (x1 - x3) - y1;
    x3.canonicalize();
    y3.canonicalize();
    return CurvePoint(c, x3, y3);
}

CurvePoint scalar_mul(long m, const CurvePoint& p) {
    if (m < 0) return negate(scalar_mul(-m, p));
    CurvePoint acc = CurvePoint::infinity(p.curve());
    CurvePoint base = p;
    unsigned long k = static_cast<unsigned long>(m);
    while (k > 0) {
        if (k & 1) acc = add(acc, base);
        k >>= 1;
        if (k > 0) base = add(base, base);
    }
    return acc;
}

std::array<CurvePoint, 4> torsion_points(const Curve& c) {
    return {CurvePoint::infinity(c),
            CurvePoint(c, BigRat(0), BigRat(0)),
            CurvePoint(c, BigRat(c.d), BigRat(0)),
            CurvePoint(c, BigRat(-c.d), BigRat(0))};
}

SquareClassTriple descent_triple(const CurvePoint& p) {
    const BigInt& d = p.curve().d;
    if (p.is_infinity()) return {1, 1, 1};
    if (p.y() == 0) {
        if (p.x() == 0) return {squarefree_part(BigInt(-d)), -1, squarefree_part(d)};
        if (p.x() == -d)
            return {squarefree_part(BigInt(-2 * d)), squarefree_part(BigInt(-d)),
                    squarefree_part(BigInt(2))};
        return {squarefree_part(BigInt(2)), squarefree_part(d),
                squarefree_part(BigInt(2 * d))};
    }
    const BigRat& x = p.x();
    return {squarefree_part(BigRat(x - d)), squarefree_part(x),
            squarefree_part(BigRat(x + d))};
}

bool same_coset(const CurvePoint& p, const CurvePoint& r) {
    if (p.curve() != r.curve()) throw domain_error("same_coset: points on different curves");
    return descent_triple(p) == descent_triple(r);
}

BigRat double_x(const Curve& c, const BigRat& x) {
    const BigInt& r = num(x);
    const BigInt& s = den(x);
    const BigInt& d = c.d;
    BigInt t = r * r + d * d * s * s;
    BigInt denom = 4 * r * s * (r - d * s) * (r + d * s);
    if (denom == 0) throw domain_error("double_x: 2-torsion x-coordinate");
    return make_rat(t * t, denom);
}

}  // namespace twistkit
