#pragma once

// E = F(sqrt(a1), sqrt(a2)) over F = Q, as exact coordinate vectors over the
// basis {1, r1, r2, r12} with r1 = sqrt(a1), r2 = sqrt(a2) and the fixed
// root choice r12 = r1 * r2.
//
// Sign convention for the Galois group {id, s1, s2, s12}: s_i FIXES r_i and
// negates the other root, so
//     s1:  (f0,  f1, -f2, -f3)      s2:  (f0, -f1,  f2, -f3)
//     s12: (f0, -f1, -f2,  f3)
// The fixed field of s1 is E1 = F(r1), of s2 is E2 = F(r2), of s12 is
// E3 = F(r12).

#include <array>
#include <string>
#include <utility>

#include "biquad90/errors.hpp"
#include "biquad90/rational.hpp"

namespace biquad90 {

enum class Galois : unsigned { id = 0, s1 = 1, s2 = 2, s12 = 3 };

// The Klein four group composes by XOR on the indices above.
inline Galois compose(Galois a, Galois b) {
    return static_cast<Galois>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

inline const char* to_string(Galois g) {
    switch (g) {
        case Galois::id:  return "id";
        case Galois::s1:  return "s1";
        case Galois::s2:  return "s2";
        case Galois::s12: return "s12";
    }
    return "?";
}

// Validated field parameters: a1, a2 and a1*a2 are all nonsquares in Q, so E
// really is a quartic field and {1, r1, r2, r12} is a basis.
class BiquadConfig {
public:
    BiquadConfig(const Rational& a1, const Rational& a2) : a1_(a1), a2_(a2) {
        if (is_square(a1).has_value())
            throw Error(ErrorKind::NotBiquadratic, "a1 = " + biquad90::to_string(a1) + " is a square in Q", 1);
        if (is_square(a2).has_value())
            throw Error(ErrorKind::NotBiquadratic, "a2 = " + biquad90::to_string(a2) + " is a square in Q", 2);
        if (is_square(Rational(a1 * a2)).has_value())
            throw Error(ErrorKind::NotBiquadratic,
                        "a1*a2 = " + biquad90::to_string(Rational(a1 * a2)) + " is a square in Q", 3);
    }

    const Rational& a1() const { return a1_; }
    const Rational& a2() const { return a2_; }

    bool operator==(const BiquadConfig& o) const { return a1_ == o.a1_ && a2_ == o.a2_; }
    bool operator!=(const BiquadConfig& o) const { return !(*this == o); }

private:
    Rational a1_, a2_;
};

inline BiquadConfig make_field(const Rational& a1, const Rational& a2) {
    return BiquadConfig(a1, a2);
}

class ExtElement {
public:
    ExtElement(BiquadConfig cfg, Rational f0, Rational f1, Rational f2, Rational f3)
        : cfg_(std::move(cfg)), c_{std::move(f0), std::move(f1), std::move(f2), std::move(f3)} {}

    static ExtElement zero(const BiquadConfig& cfg) { return {cfg, 0, 0, 0, 0}; }
    static ExtElement one(const BiquadConfig& cfg) { return {cfg, 1, 0, 0, 0}; }
    static ExtElement from_rational(const BiquadConfig& cfg, const Rational& r) { return {cfg, r, 0, 0, 0}; }
    static ExtElement root1(const BiquadConfig& cfg) { return {cfg, 0, 1, 0, 0}; }
    static ExtElement root2(const BiquadConfig& cfg) { return {cfg, 0, 0, 1, 0}; }
    static ExtElement root12(const BiquadConfig& cfg) { return {cfg, 0, 0, 0, 1}; }

    const BiquadConfig& config() const { return cfg_; }
    const Rational& f0() const { return c_[0]; }
    const Rational& f1() const { return c_[1]; }
    const Rational& f2() const { return c_[2]; }
    const Rational& f3() const { return c_[3]; }
    const Rational& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }

    bool operator==(const ExtElement& o) const { return cfg_ == o.cfg_ && c_ == o.c_; }
    bool operator!=(const ExtElement& o) const { return !(*this == o); }

private:
    BiquadConfig cfg_;
    std::array<Rational, 4> c_;
};

namespace detail {
inline void require_same_config(const ExtElement& a, const ExtElement& b) {
    if (a.config() != b.config())
        throw Error(ErrorKind::MixedConfig, "elements belong to different field configurations");
}
}  // namespace detail

inline ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    detail::require_same_config(a, b);
    return {a.config(), a.f0() + b.f0(), a.f1() + b.f1(), a.f2() + b.f2(), a.f3() + b.f3()};
}

inline ExtElement operator-(const ExtElement& a) {
    return {a.config(), -a.f0(), -a.f1(), -a.f2(), -a.f3()};
}

inline ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    detail::require_same_config(a, b);
    return {a.config(), a.f0() - b.f0(), a.f1() - b.f1(), a.f2() - b.f2(), a.f3() - b.f3()};
}

// Multiplication over the basis products:
//   r1*r1 = a1,  r2*r2 = a2,  r12*r12 = a1*a2,
//   r1*r2 = r12, r1*r12 = a1*r2, r2*r12 = a2*r1.
inline ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    detail::require_same_config(a, b);
    const Rational& a1 = a.config().a1();
    const Rational& a2 = a.config().a2();
    const Rational &x0 = a.f0(), &x1 = a.f1(), &x2 = a.f2(), &x3 = a.f3();
    const Rational &y0 = b.f0(), &y1 = b.f1(), &y2 = b.f2(), &y3 = b.f3();
    return {a.config(),
            x0 * y0 + a1 * (x1 * y1) + a2 * (x2 * y2) + a1 * a2 * (x3 * y3),
            x0 * y1 + x1 * y0 + a2 * (x2 * y3 + x3 * y2),
            x0 * y2 + x2 * y0 + a1 * (x1 * y3 + x3 * y1),
            x0 * y3 + x3 * y0 + x1 * y2 + x2 * y1};
}

inline ExtElement operator*(const Rational& s, const ExtElement& a) {
    return {a.config(), s * a.f0(), s * a.f1(), s * a.f2(), s * a.f3()};
}

inline ExtElement galois_apply(Galois g, const ExtElement& e) {
    switch (g) {
        case Galois::id:  return e;
        case Galois::s1:  return {e.config(), e.f0(), e.f1(), -e.f2(), -e.f3()};
        case Galois::s2:  return {e.config(), e.f0(), -e.f1(), e.f2(), -e.f3()};
        case Galois::s12: return {e.config(), e.f0(), -e.f1(), -e.f2(), e.f3()};
    }
    throw Error(ErrorKind::InvalidArgument, "bad Galois element");
}

// N_{E/F}(e) = e * s1(e) * s2(e) * s12(e), always a rational.
inline Rational norm_E_to_F(const ExtElement& e) {
    const ExtElement n =
        (e * galois_apply(Galois::s1, e)) * (galois_apply(Galois::s2, e) * galois_apply(Galois::s12, e));
    // The three non-rational coordinates cancel identically.
    if (!n.f1().is_zero() || !n.f2().is_zero() || !n.f3().is_zero())
        throw std::logic_error("norm_E_to_F: result escaped F");
    return n.f0();
}

inline ExtElement inv(const ExtElement& e) {
    if (e.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero element");
    const ExtElement cof =
        galois_apply(Galois::s1, e) * (galois_apply(Galois::s2, e) * galois_apply(Galois::s12, e));
    const ExtElement n = e * cof;
    if (!n.f1().is_zero() || !n.f2().is_zero() || !n.f3().is_zero())
        throw std::logic_error("inv: norm escaped F");
    if (n.f0().is_zero()) throw std::logic_error("inv: zero norm for nonzero element");
    return rat_inv(n.f0()) * cof;
}

inline ExtElement operator/(const ExtElement& a, const ExtElement& b) {
    detail::require_same_config(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero element");
    return a * inv(b);
}

struct SubfieldFlags {
    bool in_F;
    bool in_E1;
    bool in_E2;
    bool in_E3;
};

inline SubfieldFlags subfield_membership(const ExtElement& e) {
    const bool z1 = e.f1().is_zero();
    const bool z2 = e.f2().is_zero();
    const bool z3 = e.f3().is_zero();
    return SubfieldFlags{z1 && z2 && z3, z2 && z3, z1 && z3, z1 && z2};
}

enum class NormTarget { E1, E2, E3, F_from_E, F_from_E1, F_from_E2 };

// Relative norms.  N_{E/Ei}(e) = e * s_i(e) lands in the fixed field of s_i;
// the two quadratic norms N_{Ei/F} require their argument to lie in Ei and
// conjugate by the restriction of the complementary generator.
inline ExtElement norm(NormTarget target, const ExtElement& e) {
    switch (target) {
        case NormTarget::E1:
            return e * galois_apply(Galois::s1, e);
        case NormTarget::E2:
            return e * galois_apply(Galois::s2, e);
        case NormTarget::E3:
            return e * galois_apply(Galois::s12, e);
        case NormTarget::F_from_E:
            return ExtElement::from_rational(e.config(), norm_E_to_F(e));
        case NormTarget::F_from_E1: {
            if (!subfield_membership(e).in_E1)
                throw Error(ErrorKind::NotInSubfield, "argument of N_{E1/F} is not in E1");
            return e * galois_apply(Galois::s2, e);
        }
        case NormTarget::F_from_E2: {
            if (!subfield_membership(e).in_E2)
                throw Error(ErrorKind::NotInSubfield, "argument of N_{E2/F} is not in E2");
            return e * galois_apply(Galois::s1, e);
        }
    }
    throw Error(ErrorKind::InvalidArgument, "bad norm target");
}

// Rational values of the quadratic norms, for callers working in F.
inline Rational norm_E1_to_F(const ExtElement& e) {
    const ExtElement n = norm(NormTarget::F_from_E1, e);
    return n.f0();
}

inline Rational norm_E2_to_F(const ExtElement& e) {
    const ExtElement n = norm(NormTarget::F_from_E2, e);
    return n.f0();
}

}  // namespace biquad90
