#pragma once

// Values of the form x^2 - a*y^2 with x, y ranging over F(sqrt(b)): every
// such value landing in F^x factors as a product of an (x^2 - a*y^2)-value
// and an (x^2 - a*b*y^2)-value, both over F.  The generic case runs through
// the biquadratic kernel decomposition with a1 = a, a2 = a*b; the cases
// where one of b, a, a*b is already a square are handled by direct
// representing identities.

#include <array>
#include <utility>

#include "biquad90/errors.hpp"
#include "biquad90/field.hpp"
#include "biquad90/hilbert90.hpp"
#include "biquad90/rational.hpp"

namespace biquad90 {

// u + v*sqrt(b).  b is carried along and may be a square.
struct QuadExtElement {
    Rational u, v, b;

    friend bool operator==(const QuadExtElement& lhs, const QuadExtElement& rhs) {
        return lhs.u == rhs.u && lhs.v == rhs.v && lhs.b == rhs.b;
    }
    friend bool operator!=(const QuadExtElement& lhs, const QuadExtElement& rhs) {
        return !(lhs == rhs);
    }
};

inline QuadExtElement qform_value(const Rational& a, const QuadExtElement& x,
                                  const QuadExtElement& y) {
    if (x.b != y.b)
        throw Error(ErrorKind::MixedConfig, "qform_value: operands over different sqrt(b)");
    const Rational& b = x.b;
    // (ux + vx s)^2 - a (uy + vy s)^2 with s^2 = b.
    const Rational u = x.u * x.u + b * x.v * x.v - a * (y.u * y.u + b * y.v * y.v);
    const Rational v = 2 * (x.u * x.v - a * y.u * y.v);
    return {u, v, b};
}

enum class QformBranch { BSquare, ASquare, ABSquare, Generic };

struct QformDecomposition {
    Rational x1, y1, x2, y2;
    Rational value;  // f = (x1^2 - a*y1^2) * (x2^2 - a*b*y2^2)
    QformBranch branch;
};

// f = x^2 - a*y^2 must land in F^x; returns the exact factorization
// f = (x1^2 - a*y1^2)(x2^2 - a*b*y2^2).  Branch order: b square, a square,
// a*b square, generic.
inline QformDecomposition qform_decompose(const Rational& a, const Rational& b,
                                          const QuadExtElement& x, const QuadExtElement& y) {
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorKind::InvalidArgument, "qform_decompose: a and b must be nonzero");
    if (x.b != b || y.b != b)
        throw Error(ErrorKind::MixedConfig, "qform_decompose: operands not over sqrt(b)");

    const QuadExtElement f = qform_value(a, x, y);
    if (!f.v.is_zero())
        throw Error(ErrorKind::ValueNotInF, "x^2 - a*y^2 has a nonzero sqrt(b)-coordinate");
    const Rational& fval = f.u;
    if (fval.is_zero())
        throw Error(ErrorKind::ZeroValue, "x^2 - a*y^2 is zero");

    if (const auto s = is_square(b)) {
        // x, y collapse into F under sqrt(b) -> s.
        return {x.u + x.v * *s, y.u + y.v * *s, 1, 0, fval, QformBranch::BSquare};
    }
    if (const auto c = is_square(a)) {
        // Representing identity for the form with square parameter:
        // f = ((f+1)/2)^2 - c^2 ((f-1)/(2c))^2.
        return {(fval + 1) / 2, (fval - 1) / (2 * *c), 1, 0, fval, QformBranch::ASquare};
    }
    if (const auto c = is_square(a * b)) {
        return {1, 0, (fval + 1) / 2, (fval - 1) / (2 * *c), fval, QformBranch::ABSquare};
    }

    // Generic: none of a, b, ab is a square, so (a1, a2) = (a, ab) is a valid
    // biquadratic configuration and sqrt(b) = r12 / a identifies F(sqrt(b))
    // with E3.  Then e = x + y*r1 has N_{E/E3}(e) = f, and e splits.
    const BiquadConfig cfg = make_field(a, a * b);
    const ExtElement e(cfg, x.u, y.u, y.v, rat_div(x.v, a));
    const auto [k1, k2] = kernel_decompose(e);
    return {k1.f0(), k1.f1(), k2.f0(), k2.f2(), fval, QformBranch::Generic};
}

// Evaluates the factorization's two factors; their product must equal value.
inline std::pair<Rational, Rational> qform_factors(const Rational& a, const Rational& b,
                                                   const QformDecomposition& d) {
    return {d.x1 * d.x1 - a * d.y1 * d.y1, d.x2 * d.x2 - a * b * d.y2 * d.y2};
}

// The norm-one element ((m^2-n^2) + 2mn i)/(m^2+n^2) of F(i) gives the
// classical parameterization; absolute values keep the legs nonnegative.
inline std::array<Int, 3> pythagorean_triple(const Int& m, const Int& n) {
    if (m.is_zero() && n.is_zero())
        throw Error(ErrorKind::ZeroInput, "pythagorean_triple: m = n = 0");
    using boost::multiprecision::abs;
    return {abs(m * m - n * n), abs(2 * m * n), m * m + n * n};
}

}  // namespace biquad90
