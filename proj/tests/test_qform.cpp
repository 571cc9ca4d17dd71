#include "doctest.h"

#include <random>

#include "biquad90/errors.hpp"
#include "biquad90/qform.hpp"
#include "helpers.hpp"

using namespace biquad90;
using namespace testutil;

namespace {

// Exact check of the contract f = (x1^2 - a y1^2)(x2^2 - a b y2^2).
void check_identity(const Rational& a, const Rational& b, const QformDecomposition& d) {
    const auto [p, q] = qform_factors(a, b, d);
    CHECK(p * q == d.value);
}

}  // namespace

TEST_CASE("qform value: pinned evaluations over b = 3") {
    const QuadExtElement x{1, 2, 3};
    const QuadExtElement y{1, 1, 3};
    CHECK(qform_value(2, x, y) == QuadExtElement{5, 0, 3});
    CHECK(qform_value(2, {1, 0, 3}, {0, 0, 3}) == QuadExtElement{1, 0, 3});
    CHECK(qform_value(2, {0, 1, 3}, {0, 0, 3}) == QuadExtElement{3, 0, 3});
    // sqrt(b)-coordinate need not vanish in general.
    CHECK(qform_value(2, {1, 1, 3}, {0, 0, 3}) == QuadExtElement{4, 2, 3});
    CHECK_THROWS_AS(qform_value(2, {1, 0, 3}, {1, 0, 5}), Error);
}

TEST_CASE("qform decompose: pinned examples, one per branch") {
    // Generic branch, the worked 5 = (1-2)(1-6).
    const QformDecomposition g = qform_decompose(2, 3, {1, 2, 3}, {1, 1, 3});
    CHECK(g.branch == QformBranch::Generic);
    CHECK(g.x1 == 1);
    CHECK(g.y1 == 1);
    CHECK(g.x2 == 1);
    CHECK(g.y2 == 1);
    CHECK(g.value == 5);
    check_identity(2, 3, g);

    // a = 4 = 2^2: representing identity with c = 2, f = 5.
    const QformDecomposition sa = qform_decompose(4, 3, {3, 0, 3}, {1, 0, 3});
    CHECK(sa.branch == QformBranch::ASquare);
    CHECK(sa.x1 == 3);
    CHECK(sa.y1 == 1);
    CHECK(sa.x2 == 1);
    CHECK(sa.y2 == 0);
    CHECK(sa.value == 5);
    check_identity(4, 3, sa);

    // b = 9 = 3^2: collapse sqrt(b) to 3.
    const QformDecomposition sb = qform_decompose(2, 9, {7, 0, 9}, {0, 0, 9});
    CHECK(sb.branch == QformBranch::BSquare);
    CHECK(sb.x1 == 7);
    CHECK(sb.y1 == 0);
    CHECK(sb.x2 == 1);
    CHECK(sb.y2 == 0);
    CHECK(sb.value == 49);
    check_identity(2, 9, sb);

    // a*b = 16 = 4^2 with a, b nonsquare.
    const QformDecomposition sab = qform_decompose(2, 8, {3, 0, 8}, {1, 0, 8});
    CHECK(sab.branch == QformBranch::ABSquare);
    CHECK(sab.x1 == 1);
    CHECK(sab.y1 == 0);
    CHECK(sab.x2 == 4);
    CHECK(sab.y2 == Rational(3) / 4);
    CHECK(sab.value == 7);
    check_identity(2, 8, sab);
}

TEST_CASE("qform decompose: branch precedence when several squares coincide") {
    // Both b and a square: the b-branch wins.  The formal sqrt(b)-coordinate
    // of f still has to vanish, so plant uy*vy = ux*vx/a.
    const QformDecomposition d =
        qform_decompose(4, 9, {5, 1, 9}, {1, Rational(5) / 4, 9});
    CHECK(d.branch == QformBranch::BSquare);
    CHECK(d.x1 == 8);  // 5 + 1*3
    CHECK(d.y1 == Rational(19) / 4);
    CHECK(d.value == Rational(-105) / 4);
    check_identity(4, 9, d);
}

TEST_CASE("qform decompose: rejections") {
    try {
        qform_decompose(2, 3, {1, 1, 3}, {0, 0, 3});  // (1+sqrt(3))^2 not in F
        FAIL("expected ValueNotInF");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::ValueNotInF);
    }
    try {
        qform_decompose(4, 3, {2, 0, 3}, {1, 0, 3});  // 4 - 4 = 0
        FAIL("expected ZeroValue");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::ZeroValue);
    }
    try {
        qform_decompose(0, 3, {1, 0, 3}, {0, 0, 3});
        FAIL("expected InvalidArgument");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::InvalidArgument);
    }
    CHECK_THROWS_AS(qform_decompose(2, 0, {1, 0, 0}, {0, 0, 0}), Error);
    CHECK_THROWS_AS(qform_decompose(2, 3, {1, 0, 5}, {0, 0, 5}), Error);
}

TEST_CASE("qform decompose: randomized identity across all four branches") {
    std::mt19937_64 rng(501);
    const int trials = 150;

    auto plant_pair = [&](const Rational& a, const Rational& b) {
        // Force the sqrt(b)-coordinate of x^2 - a y^2 to vanish:
        // pick vx, uy, vy free and set ux = a uy vy / vx (vx != 0).
        const Rational vx = rnd_nonzero_rational(rng, 6);
        const Rational uy = rnd_rational(rng, 6);
        const Rational vy = rnd_rational(rng, 6);
        const Rational ux = a * uy * vy / vx;
        return std::pair<QuadExtElement, QuadExtElement>{{ux, vx, b}, {uy, vy, b}};
    };

    auto run_planted = [&](const Rational& a, const Rational& b, QformBranch expected) {
        int decomposed = 0;
        for (int trial = 0; trial < trials; ++trial) {
            const auto [x, y] = plant_pair(a, b);
            const Rational f = qform_value(a, x, y).u;
            if (f.is_zero()) continue;  // ZeroValue is rejected; skip the planted zero
            const QformDecomposition d = qform_decompose(a, b, x, y);
            CHECK(d.branch == expected);
            CHECK(d.value == f);
            check_identity(a, b, d);
            ++decomposed;
        }
        CHECK(decomposed > trials / 2);
    };

    run_planted(2, 3, QformBranch::Generic);
    run_planted(Rational(-1), 2, QformBranch::Generic);
    run_planted(4, 3, QformBranch::ASquare);
    run_planted(Rational(9) / 4, 5, QformBranch::ASquare);
    run_planted(2, 9, QformBranch::BSquare);
    run_planted(3, Rational(1) / 4, QformBranch::BSquare);
    run_planted(2, 8, QformBranch::ABSquare);
    run_planted(3, 27, QformBranch::ABSquare);
}

TEST_CASE("qform decompose: rational pairs over F itself (v-coordinates zero)") {
    std::mt19937_64 rng(502);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = (trial % 2 == 0) ? Rational(2) : Rational(-5);
        const Rational b = (trial % 3 == 0) ? Rational(3) : Rational(7);
        const QuadExtElement x{rnd_rational(rng, 8), 0, b};
        const QuadExtElement y{rnd_rational(rng, 8), 0, b};
        const Rational f = x.u * x.u - a * y.u * y.u;
        if (f.is_zero()) continue;
        const QformDecomposition d = qform_decompose(a, b, x, y);
        CHECK(d.value == f);
        check_identity(a, b, d);
    }
}

TEST_CASE("representing identity: ((f+1)/2)^2 - c^2 ((f-1)/(2c))^2 = f") {
    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational f = rnd_nonzero_rational(rng, 10);
        const Rational c = rnd_nonzero_rational(rng, 10);
        const Rational x = (f + 1) / 2;
        const Rational y = (f - 1) / (2 * c);
        CHECK(x * x - c * c * y * y == f);
    }
}

TEST_CASE("pythagorean triples: pinned and degenerate cases") {
    CHECK(pythagorean_triple(2, 1) == std::array<Int, 3>{3, 4, 5});
    CHECK(pythagorean_triple(3, 2) == std::array<Int, 3>{5, 12, 13});
    CHECK(pythagorean_triple(1, 1) == std::array<Int, 3>{0, 2, 2});
    CHECK(pythagorean_triple(-2, 1) == std::array<Int, 3>{3, 4, 5});
    CHECK(pythagorean_triple(0, 3) == std::array<Int, 3>{9, 0, 9});
    try {
        pythagorean_triple(0, 0);
        FAIL("expected ZeroInput");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::ZeroInput);
    }
}

TEST_CASE("pythagorean triples: identity and primitivity") {
    std::mt19937_64 rng(504);
    std::uniform_int_distribution<long> small(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        const Int m = small(rng), n = small(rng);
        if (m.is_zero() && n.is_zero()) continue;
        const auto [p, q, r] = pythagorean_triple(m, n);
        CHECK(p * p + q * q == r * r);
        CHECK(r > 0);
    }
    // Coprime m > n > 0 of opposite parity give primitive triples.
    using boost::multiprecision::gcd;
    for (long m = 2; m <= 40; ++m) {
        for (long n = 1; n < m; ++n) {
            if ((m + n) % 2 == 0 || gcd(Int(m), Int(n)) != 1) continue;
            const auto [p, q, r] = pythagorean_triple(m, n);
            CHECK(gcd(gcd(p, q), r) == 1);
        }
    }
}
