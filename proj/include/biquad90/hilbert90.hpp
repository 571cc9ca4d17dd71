#pragma once

// Constructive Hilbert 90 machinery for E = F(r1, r2).
//
// qh90_witness solves t = l / s(l) for each quadratic subextension: the
// witness is 1 + t away from t = -1, and a basis root anti-fixed by the
// relevant automorphism at t = -1.  Everything else is built from that:
// a pair (alpha1, alpha2) satisfying the crossed-homomorphism conditions is
// split as alpha_i = beta / s_i(beta) by one common beta, found by pulling
// the two quadratic witnesses apart with a kernel decomposition.
//
// The kernel in question is K = ker of the operator (1 - s1)(1 - s2) acting
// multiplicatively on E^x.  Its elements are exactly the products
// E1^x * E2^x, and they are recognized coordinate-wise by f0*f3 = f1*f2.

#include <optional>
#include <utility>

#include "biquad90/errors.hpp"
#include "biquad90/field.hpp"
#include "biquad90/group_ring.hpp"
#include "biquad90/rational.hpp"

namespace biquad90 {

namespace detail {
inline Galois generator_of(int i) {
    switch (i) {
        case 1: return Galois::s1;
        case 2: return Galois::s2;
        case 3: return Galois::s12;
        default:
            throw Error(ErrorKind::InvalidArgument, "subextension index must be 1, 2 or 3");
    }
}
}  // namespace detail

// Witness for the quadratic Hilbert 90 along E/Ei: given nonzero t with
// t * s_i(t) = 1, returns nonzero l with t = l / s_i(l).
inline ExtElement qh90_witness(int i, const ExtElement& t) {
    const Galois s = detail::generator_of(i);
    if (t.is_zero()) throw Error(ErrorKind::ZeroElement, "qh90_witness: t is zero");
    if (t * galois_apply(s, t) != ExtElement::one(t.config()))
        throw Error(ErrorKind::NotNormOne,
                    "qh90_witness: t has norm != 1 along subextension " + std::to_string(i), i);
    const ExtElement minus_one(t.config(), -1, 0, 0, 0);
    if (t != minus_one) {
        return ExtElement::one(t.config()) + t;  // s(1+t) = 1 + 1/t = (1+t)/t
    }
    // t = -1: return a basis root that s negates.
    switch (s) {
        case Galois::s1:  return ExtElement::root2(t.config());
        case Galois::s2:  return ExtElement::root1(t.config());
        default:          return ExtElement::root1(t.config());  // s12 negates r1
    }
}

// A pair (alpha1, alpha2) defining a crossed homomorphism G -> E^x via
// f(id) = 1, f(s1) = alpha1, f(s2) = alpha2, f(s12) = s1(alpha2) * alpha1.
// Valid iff each alpha_i has norm 1 along E/Ei and the mixed compatibility
// condition alpha1 * s1(alpha2) = alpha2 * s2(alpha1) holds.
class CrossedHom {
public:
    CrossedHom(ExtElement alpha1, ExtElement alpha2)
        : alpha1_(std::move(alpha1)), alpha2_(std::move(alpha2)) {
        detail::require_same_config(alpha1_, alpha2_);
        const ExtElement one = ExtElement::one(alpha1_.config());
        if (norm(NormTarget::E1, alpha1_) != one)
            throw Error(ErrorKind::NormNotOne, "alpha1 has N_{E/E1} != 1", 1);
        if (norm(NormTarget::E2, alpha2_) != one)
            throw Error(ErrorKind::NormNotOne, "alpha2 has N_{E/E2} != 1", 2);
        if (alpha1_ * galois_apply(Galois::s1, alpha2_) !=
            alpha2_ * galois_apply(Galois::s2, alpha1_))
            throw Error(ErrorKind::CompatibilityFailed,
                        "alpha1 * s1(alpha2) != alpha2 * s2(alpha1)");
    }

    const ExtElement& alpha1() const { return alpha1_; }
    const ExtElement& alpha2() const { return alpha2_; }
    const BiquadConfig& config() const { return alpha1_.config(); }

    ExtElement value(Galois g) const {
        switch (g) {
            case Galois::id:  return ExtElement::one(config());
            case Galois::s1:  return alpha1_;
            case Galois::s2:  return alpha2_;
            case Galois::s12: return galois_apply(Galois::s1, alpha2_) * alpha1_;
        }
        throw Error(ErrorKind::InvalidArgument, "bad Galois element");
    }

private:
    ExtElement alpha1_, alpha2_;
};

inline CrossedHom crossed_hom_check(const ExtElement& alpha1, const ExtElement& alpha2) {
    return CrossedHom(alpha1, alpha2);
}

// Splits a kernel element as a product from the two quadratic subfields:
// given nonzero e with f0*f3 = f1*f2, returns (k1, k2) with k1 in E1^x,
// k2 in E2^x and e = k1 * k2.  Branches, in this order:
//   f2 != 0 and f3 != 0:  k1 = f2 + f3 r1, k2 = t + r2 with t = f0/f2;
//   f2 = 0 and f0 = 0:    k1 = r1,          k2 = f1 + f3 r2;
//   f2 = 0 and f3 = 0:    k1 = f0 + f1 r1,  k2 = 1;
//   f3 = 0 and f2 != 0:   then f1 = 0:      k1 = 1, k2 = f0 + f2 r2.
inline std::pair<ExtElement, ExtElement> kernel_decompose(const ExtElement& e) {
    if (e.is_zero()) throw Error(ErrorKind::ZeroElement, "kernel_decompose: zero element");
    const BiquadConfig& cfg = e.config();
    const Rational &f0 = e.f0(), &f1 = e.f1(), &f2 = e.f2(), &f3 = e.f3();
    if (f0 * f3 != f1 * f2)
        throw Error(ErrorKind::NotInKernel,
                    "element fails the kernel test f0*f3 = f1*f2");
    if (!f2.is_zero() && !f3.is_zero()) {
        const Rational t = rat_div(f0, f2);  // equals f1/f3 by the kernel test
        return {ExtElement(cfg, f2, f3, 0, 0), ExtElement(cfg, t, 0, 1, 0)};
    }
    if (f2.is_zero()) {
        if (f0.is_zero()) return {ExtElement::root1(cfg), ExtElement(cfg, f1, 0, f3, 0)};
        if (f3.is_zero()) return {ExtElement(cfg, f0, f1, 0, 0), ExtElement::one(cfg)};
        throw std::logic_error("kernel_decompose: unreachable branch (f2=0, f0,f3 nonzero)");
    }
    // f3 = 0, f2 != 0, hence f1 * f2 = 0 forces f1 = 0.
    if (!f1.is_zero()) throw std::logic_error("kernel_decompose: unreachable branch (f3=0, f1 nonzero)");
    return {ExtElement::one(cfg), ExtElement(cfg, f0, 0, f2, 0)};
}

// Splits N_{E/E3}(e), a unit of F for kernel elements e, as a product of
// quadratic norms from E1 and E2:
//     N_{E/E3}(e) = N_{E1/F}(gamma1) * N_{E2/F}(gamma2).
inline std::pair<ExtElement, ExtElement> norm_product_witness(const ExtElement& e) {
    return kernel_decompose(e);
}

struct KernelReport {
    // Five descriptions of the same kernel; the flags always agree.
    bool in_K1;  // (1 - s1)(1 - s2) . e = 1
    bool in_K2;  // e in <E1^x, E2^x>
    bool in_K3;  // e in E1^x * E2^x
    bool in_K4;  // N_{E/E3}(e) in F^x
    bool in_K5;  // N_{E/E3}(e) in N_{E1/F}(E1^x) * N_{E2/F}(E2^x)
    std::optional<std::pair<ExtElement, ExtElement>> decomposition;  // e = k1 * k2
    std::optional<std::pair<ExtElement, ExtElement>> norm_witness;   // gammas for in_K5
};

inline KernelReport kernel_membership(const ExtElement& e) {
    if (e.is_zero()) throw Error(ErrorKind::ZeroElement, "kernel_membership: zero element");

    // Direct operator test: (1-s1)(1-s2) . e = 1 iff e * s12(e) = s1(e) * s2(e).
    const bool k1 =
        e * galois_apply(Galois::s12, e) == galois_apply(Galois::s1, e) * galois_apply(Galois::s2, e);
    // Coordinate test for N_{E/E3}(e) in F.
    const bool k4 = e.f0() * e.f3() == e.f1() * e.f2();

    if (k1 != k4)
        throw std::logic_error("kernel_membership: operator and coordinate tests disagree");

    KernelReport report{k1, k4, k4, k4, k4, std::nullopt, std::nullopt};
    if (k4) {
        const auto split = kernel_decompose(e);
        if (split.first * split.second != e)
            throw std::logic_error("kernel_membership: decomposition does not multiply back");
        const ExtElement n3 = norm(NormTarget::E3, e);
        const Rational product = norm_E1_to_F(split.first) * norm_E2_to_F(split.second);
        if (n3 != ExtElement::from_rational(e.config(), product))
            throw std::logic_error("kernel_membership: norm witness does not certify");
        report.decomposition = split;
        report.norm_witness = split;
    }
    return report;
}

// Common witness for a crossed homomorphism: beta with
// alpha_i = beta / s_i(beta) for i = 1, 2.
inline ExtElement coboundary_witness(const CrossedHom& h) {
    const ExtElement n1 = qh90_witness(1, h.alpha1());
    const ExtElement n2 = qh90_witness(2, h.alpha2());
    const ExtElement x = n1 / n2;
    // The compatibility condition makes x a kernel element; split it and
    // slide the E1 part into n1, the E2 part into n2.
    const auto [k1, k2] = kernel_decompose(x);
    const ExtElement beta = n1 / k1;
    if (beta != n2 * k2)
        throw std::logic_error("coboundary_witness: the two witness forms disagree");
    return beta;
}

}  // namespace biquad90
