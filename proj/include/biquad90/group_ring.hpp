#pragma once

// The integral group ring Z[G] for G = {id, s1, s2, s12}, with its
// multiplicative action on nonzero field elements:
//     (c0 + c1 s1 + c2 s2 + c3 s12) . e
//         = e^c0 * s1(e)^c1 * s2(e)^c2 * s12(e)^c3.
// Additive operators on E^x such as 1 - s1 or (1 - s1)(1 - s2) are formed
// here and applied through act().

#include <utility>

#include "biquad90/errors.hpp"
#include "biquad90/field.hpp"
#include "biquad90/rational.hpp"

namespace biquad90 {

struct GroupRingElement {
    Int c0, c1, c2, c3;  // coefficients of id, s1, s2, s12

    GroupRingElement() : c0(0), c1(0), c2(0), c3(0) {}
    GroupRingElement(Int a, Int b, Int c, Int d)
        : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)), c3(std::move(d)) {}

    static GroupRingElement zero() { return {}; }
    static GroupRingElement identity() { return {1, 0, 0, 0}; }
    static GroupRingElement basis(Galois g) {
        GroupRingElement u;
        u.coeff(g) = 1;
        return u;
    }

    Int& coeff(Galois g) {
        switch (g) {
            case Galois::id:  return c0;
            case Galois::s1:  return c1;
            case Galois::s2:  return c2;
            case Galois::s12: return c3;
        }
        throw Error(ErrorKind::InvalidArgument, "bad Galois element");
    }
    const Int& coeff(Galois g) const { return const_cast<GroupRingElement*>(this)->coeff(g); }

    bool operator==(const GroupRingElement& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2 && c3 == o.c3;
    }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }
};

inline GroupRingElement operator+(const GroupRingElement& u, const GroupRingElement& v) {
    return {u.c0 + v.c0, u.c1 + v.c1, u.c2 + v.c2, u.c3 + v.c3};
}

inline GroupRingElement operator-(const GroupRingElement& u) {
    return {-u.c0, -u.c1, -u.c2, -u.c3};
}

inline GroupRingElement operator-(const GroupRingElement& u, const GroupRingElement& v) {
    return u + (-v);
}

// Convolution over the Klein four multiplication table, written out in full:
// the id coefficient collects the four products landing on id, and so on.
inline GroupRingElement operator*(const GroupRingElement& u, const GroupRingElement& v) {
    return {u.c0 * v.c0 + u.c1 * v.c1 + u.c2 * v.c2 + u.c3 * v.c3,
            u.c0 * v.c1 + u.c1 * v.c0 + u.c2 * v.c3 + u.c3 * v.c2,
            u.c0 * v.c2 + u.c1 * v.c3 + u.c2 * v.c0 + u.c3 * v.c1,
            u.c0 * v.c3 + u.c1 * v.c2 + u.c2 * v.c1 + u.c3 * v.c0};
}

// e^k with an arbitrary-precision exponent; negative exponents go through
// the inverse, so e must be nonzero for k < 0.
inline ExtElement ext_pow(const ExtElement& e, const Int& k) {
    ExtElement base = e;
    Int n = k;
    if (n < 0) {
        base = inv(e);
        n = -n;
    }
    ExtElement acc = ExtElement::one(e.config());
    while (n > 0) {
        if (boost::multiprecision::bit_test(n, 0)) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

inline ExtElement act(const GroupRingElement& u, const ExtElement& e) {
    if (e.is_zero())
        throw Error(ErrorKind::ZeroElement, "group ring acts on nonzero elements only");
    ExtElement out = ext_pow(e, u.c0);
    out = out * ext_pow(galois_apply(Galois::s1, e), u.c1);
    out = out * ext_pow(galois_apply(Galois::s2, e), u.c2);
    out = out * ext_pow(galois_apply(Galois::s12, e), u.c3);
    return out;
}

}  // namespace biquad90
