#pragma once

// Exact rational scalars for the whole library.  Backed by
// boost::multiprecision (cpp_int / cpp_rational): arbitrary precision,
// always canonical (gcd-reduced, positive denominator), no floating point
// anywhere.  Only exact predicates and exact square-root extraction are
// added here.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "biquad90/errors.hpp"

namespace biquad90 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int denom(const Rational& x) { return boost::multiprecision::denominator(x); }

// p/q as a canonical Rational.  The backend reduces by gcd but insists on a
// positive denominator, so the sign is normalized here.
inline Rational make_rational(Int p, Int q) {
    if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

// Floor of the exact integer square root.  Requires n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

// Exact square root in Q: returns r >= 0 with r*r == x, or nothing when x is
// not the square of a rational.  is_square(0) == 0.
inline std::optional<Rational> is_square(const Rational& x) {
    if (x < 0) return std::nullopt;
    const Int p = numer(x);
    const Int q = denom(x);
    const Int rp = boost::multiprecision::sqrt(p);
    if (rp * rp != p) return std::nullopt;
    const Int rq = boost::multiprecision::sqrt(q);
    if (rq * rq != q) return std::nullopt;
    return Rational(rp, rq);
}

inline Rational rat_inv(const Rational& x) {
    if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return make_rational(denom(x), numer(x));
}

inline Rational rat_div(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return a / b;
}

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string to_string(const Rational& x) {
    const Int q = denom(x);
    std::string s = numer(x).str();
    if (q != 1) {
        s += '/';
        s += q.str();
    }
    return s;
}

inline std::string to_string(const Int& n) { return n.str(); }

// Strict parser for the canonical text form: optional leading '-', a digit
// run, optionally '/' and a nonzero digit run.  No whitespace.  Reports the
// byte offset of the first offending character.
namespace detail {

// cpp_int's string constructor treats a leading '0' as an octal prefix, so
// decimal digit runs must be trimmed before conversion ("019" would throw).
inline Int int_from_decimal_digits(std::string_view digits) {
    std::size_t i = 0;
    while (i + 1 < digits.size() && digits[i] == '0') ++i;
    return Int(std::string(digits.substr(i)));
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) -> void {
        throw Error(ErrorKind::ParseError, "invalid rational: " + why,
                    static_cast<long>(pos));
    };
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    const std::size_t num_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_start) fail("expected digits");
    Int p = detail::int_from_decimal_digits(text.substr(num_start, pos - num_start));
    Int q = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_start) fail("expected digits after '/'");
        q = detail::int_from_decimal_digits(text.substr(den_start, pos - den_start));
        if (q.is_zero()) {
            pos = den_start;
            fail("zero denominator");
        }
    }
    if (pos != text.size()) fail("trailing characters");
    if (negative) p = -p;
    return Rational(p, q);
}

}  // namespace biquad90
