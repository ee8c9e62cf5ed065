#ifndef TWISTKIT_CURVE_HPP
#define TWISTKIT_CURVE_HPP

// The family y^2 = x^3 - D^2 x over Q: exact group law, torsion, and the
// two-descent map to square-class triples.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/exact.hpp"

namespace twistkit {

class Curve {
  public:
    BigInt d;  // positive parameter; the coset and height theory needs it squarefree

    // Simultaneous-Pell lifts land on E_{abcd} with abcd not necessarily
    // squarefree, so the curve itself only requires D >= 1; operations whose
    // proofs use squarefreeness check is_squarefree().
    explicit Curve(BigInt d_) : d(std::move(d_)) {
        if (d < 1) throw domain_error("Curve: D must be positive");
        squarefree_ = squarefree_part(d) == d;
    }

    bool is_squarefree() const { return squarefree_; }

    friend bool operator==(const Curve& a, const Curve& b) { return a.d == b.d; }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

    // y^2 value at x; a rational point exists at x iff this is a square.
    BigRat rhs(const BigRat& x) const {
        return x * x * x - BigRat(d * d) * x;
    }

  private:
    bool squarefree_ = true;
};

// Guard for operations whose underlying statements assume squarefree D.
inline void require_squarefree(const Curve& c, const char* where) {
    if (!c.is_squarefree())
        throw domain_error(std::string(where) + ": requires squarefree D");
}

// Image of a point under the descent map: squarefree class representatives
// of (x - D, x, x + D).  Their product is always a perfect square.
struct SquareClassTriple {
    BigInt c1, c2, c3;

    friend bool operator==(const SquareClassTriple& a, const SquareClassTriple& b) {
        return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
    }
    friend bool operator!=(const SquareClassTriple& a, const SquareClassTriple& b) {
        return !(a == b);
    }
    friend bool operator<(const SquareClassTriple& a, const SquareClassTriple& b) {
        if (a.c1 != b.c1) return a.c1 < b.c1;
        if (a.c2 != b.c2) return a.c2 < b.c2;
        return a.c3 < b.c3;
    }

    std::string str() const;
};

class CurvePoint {
  public:
    // Point at infinity.
    explicit CurvePoint(Curve c) : curve_(std::move(c)), infinity_(true) {}

    // Affine point; verifies y^2 = x^3 - D^2 x exactly.
    CurvePoint(Curve c, BigRat x, BigRat y)
        : curve_(std::move(c)), infinity_(false), x_(std::move(x)), y_(std::move(y)) {
        if (y_ * y_ != curve_.rhs(x_))
            throw domain_error("CurvePoint: (x, y) is not on y^2 = x^3 - D^2 x");
    }

    static CurvePoint infinity(const Curve& c) { return CurvePoint(c); }

    const Curve& curve() const { return curve_; }
    bool is_infinity() const { return infinity_; }
    const BigRat& x() const {
        if (infinity_) throw domain_error("x(): point at infinity");
        return x_;
    }
    const BigRat& y() const {
        if (infinity_) throw domain_error("y(): point at infinity");
        return y_;
    }

    bool is_torsion() const {
        if (infinity_) return true;
        return y_ == 0;  // exactly {(0,0), (+-D,0)} on this family
    }

    bool is_integral() const {
        return !infinity_ && den(x_) == 1 && den(y_) == 1;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.curve_ != b.curve_) return false;
        if (a.infinity_ || b.infinity_) return a.infinity_ && b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

    std::string str() const;

  private:
    Curve curve_;
    bool infinity_;
    BigRat x_, y_;
};

CurvePoint negate(const CurvePoint& p);

// Chord-tangent group law.  Throws if the points live on different curves.
CurvePoint add(const CurvePoint& p, const CurvePoint& q);

// m-fold sum by a binary ladder; scalar_mul(-m, P) = negate(scalar_mul(m, P)).
CurvePoint scalar_mul(long m, const CurvePoint& p);

// The full rational torsion {O, (0,0), (D,0), (-D,0)}.
std::array<CurvePoint, 4> torsion_points(const Curve& c);

// Descent image.  Affine non-torsion points map to the square classes of
// (x - D, x, x + D); the torsion images are the fixed triples
//   O -> (1,1,1), (0,0) -> (-D,-1,D), (-D,0) -> (-2D,-D,2), (D,0) -> (2,D,2D),
// each reduced to squarefree parts.
SquareClassTriple descent_triple(const CurvePoint& p);

// True iff p and r land in the same coset of doubles, i.e. their descent
// images agree componentwise.
bool same_coset(const CurvePoint& p, const CurvePoint& r);

// x-coordinate of 2P computed from x(P) alone:
//   x(2P) = (r^2 + D^2 s^2)^2 / (4 r s (r - D s)(r + D s))  for x = r/s.
// Throws when P is 2-torsion (denominator vanishes).
BigRat double_x(const Curve& c, const BigRat& x);

}  // namespace twistkit

#endif
