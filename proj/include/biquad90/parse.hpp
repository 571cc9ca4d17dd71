#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biquad90/errors.hpp"
#include "biquad90/field.hpp"
#include "biquad90/group_ring.hpp"
#include "biquad90/qform.hpp"
#include "biquad90/rational.hpp"

namespace biquad90 {

namespace detail {

// Recursive-descent scanner shared by the three linear-combination grammars:
//   expr := ['-'] term (('+'|'-') term)*
//   term := coefficient ['*' symbol] | symbol
// Signs live at the expression level only, so coefficients scan unsigned.
// Duplicate symbols accumulate. ParseError positions are byte offsets into
// the original string.
class TermScanner {
public:
    // symbols must be ordered longest-first so "r12" wins over "r1".
    TermScanner(const std::string& src, std::vector<std::pair<std::string, int>> symbols,
                bool allow_fraction)
        : src_(src), symbols_(std::move(symbols)), allow_fraction_(allow_fraction) {}

    // Returns accumulated coefficients, slot 0 being the constant term.
    std::array<Rational, 4> run() {
        std::array<Rational, 4> acc{};
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        }
        for (;;) {
            const auto [coeff, slot] = term();
            acc[static_cast<std::size_t>(slot)] += negative ? Rational(-coeff) : coeff;
            skip_ws();
            if (pos_ == src_.size()) break;
            const char c = peek();
            if (c != '+' && c != '-')
                throw Error(ErrorKind::ParseError, "expected '+' or '-'",
                            static_cast<long>(pos_));
            negative = c == '-';
            ++pos_;
        }
        return acc;
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    std::optional<int> match_symbol() {
        for (const auto& [text, slot] : symbols_) {
            if (src_.compare(pos_, text.size(), text) == 0) {
                pos_ += text.size();
                return slot;
            }
        }
        return std::nullopt;
    }

    std::pair<Rational, int> term() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ == src_.size())
            throw Error(ErrorKind::ParseError, "expected term", static_cast<long>(start));
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const Rational coeff = scan_unsigned_rational();
            skip_ws();
            if (peek() != '*') return {coeff, 0};
            ++pos_;
            skip_ws();
            const std::size_t sym_at = pos_;
            if (const auto slot = match_symbol()) return {coeff, *slot};
            throw Error(ErrorKind::ParseError, "expected symbol after '*'",
                        static_cast<long>(sym_at));
        }
        if (const auto slot = match_symbol()) return {Rational(1), *slot};
        throw Error(ErrorKind::ParseError, "expected term", static_cast<long>(start));
    }

    Rational scan_unsigned_rational() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        const Int num = detail::int_from_decimal_digits(
            std::string_view(src_).substr(start, pos_ - start));
        if (!allow_fraction_ || peek() != '/') return Rational(num);
        ++pos_;
        const std::size_t den_at = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (den_at == pos_)
            throw Error(ErrorKind::ParseError, "expected denominator digits",
                        static_cast<long>(den_at));
        const Int den = detail::int_from_decimal_digits(
            std::string_view(src_).substr(den_at, pos_ - den_at));
        if (den.is_zero())
            throw Error(ErrorKind::ParseError, "zero denominator", static_cast<long>(den_at));
        return make_rational(num, den);
    }

    const std::string& src_;
    std::vector<std::pair<std::string, int>> symbols_;
    bool allow_fraction_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Coefficient grammar over the basis {1, r1, r2, r12}, e.g. "1/2 + 3*r1 - r12".
inline ExtElement parse_element(const std::string& src, const BiquadConfig& cfg) {
    detail::TermScanner scanner(src, {{"r12", 3}, {"r1", 1}, {"r2", 2}}, true);
    const std::array<Rational, 4> c = scanner.run();
    return ExtElement(cfg, c[0], c[1], c[2], c[3]);
}

// Same expression shape over F(rb), rb the formal square root of b.
inline QuadExtElement parse_quad_element(const std::string& src, const Rational& b) {
    detail::TermScanner scanner(src, {{"rb", 1}}, true);
    const std::array<Rational, 4> c = scanner.run();
    return QuadExtElement{c[0], c[1], b};
}

// Integer combinations of the group basis, e.g. "1 - s1 - s2 + s12".
inline GroupRingElement parse_group_ring(const std::string& src) {
    detail::TermScanner scanner(src, {{"s12", 3}, {"s1", 1}, {"s2", 2}, {"1", 0}}, false);
    const std::array<Rational, 4> c = scanner.run();
    GroupRingElement out;
    for (int i = 0; i < 4; ++i)
        out.coeff(static_cast<Galois>(i)) = boost::multiprecision::numerator(c[static_cast<std::size_t>(i)]);
    return out;
}

namespace detail {

inline void render_term(std::string& out, const Rational& c, const char* symbol) {
    if (c.is_zero()) return;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
        if (neg) out += '-';
    } else {
        out += neg ? " - " : " + ";
    }
    if (*symbol == '\0') {
        out += to_string(mag);
    } else if (mag == 1) {
        out += symbol;
    } else {
        out += to_string(mag);
        out += '*';
        out += symbol;
    }
}

}  // namespace detail

// Canonical text form; parse_element(render_element(e), e.config()) == e.
inline std::string render_element(const ExtElement& e) {
    std::string out;
    detail::render_term(out, e.f0(), "");
    detail::render_term(out, e.f1(), "r1");
    detail::render_term(out, e.f2(), "r2");
    detail::render_term(out, e.f3(), "r12");
    return out.empty() ? "0" : out;
}

inline std::string render_quad_element(const QuadExtElement& x) {
    std::string out;
    detail::render_term(out, x.u, "");
    detail::render_term(out, x.v, "rb");
    return out.empty() ? "0" : out;
}

inline std::string render_group_ring(const GroupRingElement& u) {
    std::string out;
    detail::render_term(out, Rational(u.c0), "");
    detail::render_term(out, Rational(u.c1), "s1");
    detail::render_term(out, Rational(u.c2), "s2");
    detail::render_term(out, Rational(u.c3), "s12");
    return out.empty() ? "0" : out;
}

}  // namespace biquad90
