#pragma once

// Shared test utilities: seeded random generators for rationals and field
// elements, plus independent oracles used to cross-check the library.
//
// The multiplication oracle goes through the regular representation: the
// 4x4 rational matrix of "multiply by e" over the basis {1, r1, r2, r12},
// assembled from the basis product table alone.  Its determinant gives an
// independent route to the full norm N_{E/F}.

#include <array>
#include <random>

#include "biquad90/field.hpp"
#include "biquad90/rational.hpp"

namespace testutil {

using biquad90::BiquadConfig;
using biquad90::ExtElement;
using biquad90::Rational;

inline Rational rnd_rational(std::mt19937_64& rng, int mag = 9) {
    std::uniform_int_distribution<int> num(-mag, mag);
    std::uniform_int_distribution<int> den(1, mag);
    return Rational(num(rng), den(rng));
}

inline Rational rnd_nonzero_rational(std::mt19937_64& rng, int mag = 9) {
    for (;;) {
        Rational r = rnd_rational(rng, mag);
        if (!r.is_zero()) return r;
    }
}

inline ExtElement rnd_element(std::mt19937_64& rng, const BiquadConfig& cfg, int mag = 9) {
    return {cfg, rnd_rational(rng, mag), rnd_rational(rng, mag), rnd_rational(rng, mag),
            rnd_rational(rng, mag)};
}

inline ExtElement rnd_nonzero_element(std::mt19937_64& rng, const BiquadConfig& cfg, int mag = 9) {
    for (;;) {
        ExtElement e = rnd_element(rng, cfg, mag);
        if (!e.is_zero()) return e;
    }
}

// Nonzero element of E1 = F(r1) (coordinates f2 = f3 = 0).
inline ExtElement rnd_e1_element(std::mt19937_64& rng, const BiquadConfig& cfg, int mag = 9) {
    for (;;) {
        ExtElement e(cfg, rnd_rational(rng, mag), rnd_rational(rng, mag), 0, 0);
        if (!e.is_zero()) return e;
    }
}

inline ExtElement rnd_e2_element(std::mt19937_64& rng, const BiquadConfig& cfg, int mag = 9) {
    for (;;) {
        ExtElement e(cfg, rnd_rational(rng, mag), 0, rnd_rational(rng, mag), 0);
        if (!e.is_zero()) return e;
    }
}

inline ExtElement rnd_e3_element(std::mt19937_64& rng, const BiquadConfig& cfg, int mag = 9) {
    for (;;) {
        ExtElement e(cfg, rnd_rational(rng, mag), 0, 0, rnd_rational(rng, mag));
        if (!e.is_zero()) return e;
    }
}

using Mat4 = std::array<std::array<Rational, 4>, 4>;

// Basis product table: basis[i] * basis[j] = scale(i,j) * basis[index(i,j)].
// Written out directly from r1^2 = a1, r2^2 = a2, r12 = r1*r2.
inline void basis_product(const BiquadConfig& cfg, int i, int j, Rational& scale, int& index) {
    if (i > j) std::swap(i, j);
    const Rational& a1 = cfg.a1();
    const Rational& a2 = cfg.a2();
    if (i == 0) { scale = 1; index = j; return; }
    if (i == 1 && j == 1) { scale = a1; index = 0; return; }
    if (i == 1 && j == 2) { scale = 1; index = 3; return; }
    if (i == 1 && j == 3) { scale = a1; index = 2; return; }
    if (i == 2 && j == 2) { scale = a2; index = 0; return; }
    if (i == 2 && j == 3) { scale = a2; index = 1; return; }
    scale = a1 * a2; index = 0;  // r12 * r12
}

inline Mat4 regular_rep(const ExtElement& e) {
    Mat4 m{};
    for (auto& row : m)
        for (auto& x : row) x = 0;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) {
            Rational scale;
            int index = 0;
            basis_product(e.config(), i, j, scale, index);
            m[static_cast<std::size_t>(index)][static_cast<std::size_t>(j)] += scale * e.coord(i);
        }
    }
    return m;
}

inline ExtElement mul_oracle(const ExtElement& a, const ExtElement& b) {
    const Mat4 m = regular_rep(a);
    std::array<Rational, 4> out{};
    for (int i = 0; i < 4; ++i) {
        Rational acc = 0;
        for (int j = 0; j < 4; ++j) acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b.coord(j);
        out[static_cast<std::size_t>(i)] = acc;
    }
    return {a.config(), out[0], out[1], out[2], out[3]};
}

inline Rational det4(const Mat4& m) {
    // Cofactor expansion along the first row; exact rationals throughout.
    const auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

inline Rational norm_oracle(const ExtElement& e) { return det4(regular_rep(e)); }

}  // namespace testutil
