#include "doctest.h"

#include <random>
#include <utility>

#include "biquad90/errors.hpp"
#include "biquad90/field.hpp"
#include "biquad90/group_ring.hpp"
#include "biquad90/hilbert90.hpp"
#include "helpers.hpp"

using namespace biquad90;
using namespace testutil;

namespace {

ExtElement el(const BiquadConfig& cfg, Rational f0, Rational f1, Rational f2, Rational f3) {
    return ExtElement(cfg, std::move(f0), std::move(f1), std::move(f2), std::move(f3));
}

Galois sigma_of(int i) { return i == 1 ? Galois::s1 : (i == 2 ? Galois::s2 : Galois::s12); }

}  // namespace

TEST_CASE("qh90 witness: pinned values over (2,3)") {
    const auto cfg = make_field(2, 3);
    // t = -2 - r2 is sigma1-norm-one: t = (1+r2)/s1(1+r2).
    CHECK(qh90_witness(1, el(cfg, -2, 0, -1, 0)) == el(cfg, -1, 0, -1, 0));
    CHECK(qh90_witness(1, ExtElement::one(cfg)) == el(cfg, 2, 0, 0, 0));
    // t = -1 falls to the anti-fixed basis root.
    CHECK(qh90_witness(1, el(cfg, -1, 0, 0, 0)) == ExtElement::root2(cfg));
    CHECK(qh90_witness(2, el(cfg, -1, 0, 0, 0)) == ExtElement::root1(cfg));
    CHECK(qh90_witness(3, el(cfg, -1, 0, 0, 0)) == ExtElement::root1(cfg));
}

TEST_CASE("qh90 witness: rejects zero and non-norm-one input") {
    const auto cfg = make_field(2, 3);
    CHECK_THROWS_WITH_AS(qh90_witness(1, ExtElement::zero(cfg)), doctest::Contains("zero"), Error);
    try {
        qh90_witness(1, ExtElement::root1(cfg));  // N_{E/E1}(r1) = 2
        FAIL("expected NotNormOne");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotNormOne);
        CHECK(err.detail() == 1);
    }
    try {
        qh90_witness(3, el(cfg, 1, 1, 0, 0));
        FAIL("expected NotNormOne");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotNormOne);
        CHECK(err.detail() == 3);
    }
    CHECK_THROWS_AS(qh90_witness(4, ExtElement::one(cfg)), Error);
}

TEST_CASE("qh90 witness: round-trip property over three configs") {
    std::mt19937_64 rng(401);
    const BiquadConfig cfgs[] = {make_field(2, 3), make_field(-1, 2),
                                 make_field(Rational(1) / 2, 5)};
    for (const auto& cfg : cfgs) {
        for (int i = 1; i <= 3; ++i) {
            const Galois s = sigma_of(i);
            for (int trial = 0; trial < 60; ++trial) {
                const ExtElement beta = rnd_nonzero_element(rng, cfg);
                const ExtElement t = beta / galois_apply(s, beta);
                const ExtElement ell = qh90_witness(i, t);
                CHECK(!ell.is_zero());
                CHECK(ell / galois_apply(s, ell) == t);
            }
        }
    }
}

TEST_CASE("qh90 witness: planted t = -1 and t = 1 across all subextensions") {
    const BiquadConfig cfgs[] = {make_field(2, 3), make_field(-1, -2)};
    for (const auto& cfg : cfgs) {
        for (int i = 1; i <= 3; ++i) {
            const Galois s = sigma_of(i);
            for (const Rational& unit : {Rational(1), Rational(-1)}) {
                const ExtElement t = ExtElement::from_rational(cfg, unit);
                const ExtElement ell = qh90_witness(i, t);
                CHECK(ell / galois_apply(s, ell) == t);
            }
        }
    }
}

TEST_CASE("crossed homomorphism: validation and value table") {
    const auto cfg = make_field(2, 3);
    const ExtElement one = ExtElement::one(cfg);
    const ExtElement minus_one = el(cfg, -1, 0, 0, 0);

    const CrossedHom trivial = crossed_hom_check(one, one);
    CHECK(trivial.value(Galois::id) == one);
    CHECK(trivial.value(Galois::s12) == one);

    const CrossedHom h = crossed_hom_check(minus_one, one);
    CHECK(h.value(Galois::s1) == minus_one);
    CHECK(h.value(Galois::s2) == one);
    CHECK(h.value(Galois::s12) == minus_one);  // s1(1) * (-1)

    try {
        crossed_hom_check(ExtElement::root1(cfg), one);  // N_{E/E1}(r1) = 2
        FAIL("expected NormNotOne");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NormNotOne);
        CHECK(err.detail() == 1);
    }
    try {
        crossed_hom_check(one, ExtElement::root2(cfg));  // N_{E/E2}(r2) = 3
        FAIL("expected NormNotOne");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NormNotOne);
        CHECK(err.detail() == 2);
    }
    // alpha2 = (1+r12)/s2(1+r12) = (-7-2*r12)/5 has sigma2-norm one but is
    // moved by s1, so compatibility with alpha1 = -1 fails.
    const ExtElement alpha2 = el(cfg, Rational(-7) / 5, 0, 0, Rational(-2) / 5);
    CHECK(norm(NormTarget::E2, alpha2) == one);
    CHECK_THROWS_AS(crossed_hom_check(minus_one, alpha2), Error);
    try {
        crossed_hom_check(minus_one, alpha2);
        FAIL("expected CompatibilityFailed");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::CompatibilityFailed);
    }
}

TEST_CASE("crossed homomorphism: cocycle identity f(gh) = g(f(h)) * f(g)") {
    std::mt19937_64 rng(402);
    const auto cfg = make_field(2, 3);
    const Galois all[] = {Galois::id, Galois::s1, Galois::s2, Galois::s12};
    for (int trial = 0; trial < 40; ++trial) {
        const ExtElement beta = rnd_nonzero_element(rng, cfg);
        const CrossedHom h = crossed_hom_check(beta / galois_apply(Galois::s1, beta),
                                               beta / galois_apply(Galois::s2, beta));
        for (Galois g : all)
            for (Galois k : all)
                CHECK(h.value(compose(g, k)) == galois_apply(g, h.value(k)) * h.value(g));
    }
}

TEST_CASE("kernel decompose: pinned branches over (2,3)") {
    const auto cfg = make_field(2, 3);

    const auto [k1, k2] = kernel_decompose(el(cfg, 5, 5, 1, 1));
    CHECK(k1 == el(cfg, 1, 1, 0, 0));
    CHECK(k2 == el(cfg, 5, 0, 1, 0));

    const auto [d1, d2] = kernel_decompose(el(cfg, 0, 1, 0, 1));
    CHECK(d1 == ExtElement::root1(cfg));
    CHECK(d2 == el(cfg, 1, 0, 1, 0));

    const auto [c1, c2] = kernel_decompose(ExtElement::from_rational(cfg, 7));
    CHECK(c1 == el(cfg, 7, 0, 0, 0));
    CHECK(c2 == ExtElement::one(cfg));

    // Pure E2 element takes the f3 = 0, f2 != 0 branch.
    const auto [b1, b2] = kernel_decompose(el(cfg, 4, 0, -3, 0));
    CHECK(b1 == ExtElement::one(cfg));
    CHECK(b2 == el(cfg, 4, 0, -3, 0));

    // Pure r12 multiple lands in the f2 = 0, f0 = 0 branch with f1 = 0.
    const auto [a1_, a2_] = kernel_decompose(el(cfg, 0, 0, 0, 3));
    CHECK(a1_ == ExtElement::root1(cfg));
    CHECK(a2_ == el(cfg, 0, 0, 3, 0));
    CHECK(a1_ * a2_ == el(cfg, 0, 0, 0, 3));
}

TEST_CASE("kernel decompose: rejections") {
    const auto cfg = make_field(2, 3);
    try {
        kernel_decompose(el(cfg, 1, 0, 0, 1));  // 1 + r12: f0*f3 = 1 != 0
        FAIL("expected NotInKernel");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotInKernel);
    }
    try {
        kernel_decompose(ExtElement::zero(cfg));
        FAIL("expected ZeroElement");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::ZeroElement);
    }
}

TEST_CASE("kernel decompose: random products split back exactly") {
    std::mt19937_64 rng(403);
    const BiquadConfig cfgs[] = {make_field(2, 3), make_field(-1, 2),
                                 make_field(5, 7)};
    for (const auto& cfg : cfgs) {
        for (int trial = 0; trial < 120; ++trial) {
            const ExtElement e = rnd_e1_element(rng, cfg) * rnd_e2_element(rng, cfg);
            const auto [k1, k2] = kernel_decompose(e);
            const auto m1 = subfield_membership(k1);
            const auto m2 = subfield_membership(k2);
            CHECK(m1.in_E1);
            CHECK(m2.in_E2);
            CHECK(!k1.is_zero());
            CHECK(!k2.is_zero());
            CHECK(k1 * k2 == e);
        }
    }
}

TEST_CASE("kernel membership: pinned cases over (2,3)") {
    const auto cfg = make_field(2, 3);

    const ExtElement e = el(cfg, 1, 1, 0, 0) * el(cfg, 5, 0, 1, 0);
    const KernelReport in = kernel_membership(e);
    CHECK(in.in_K1);
    CHECK(in.in_K2);
    CHECK(in.in_K3);
    CHECK(in.in_K4);
    CHECK(in.in_K5);
    REQUIRE(in.decomposition.has_value());
    CHECK(in.decomposition->first * in.decomposition->second == e);
    REQUIRE(in.norm_witness.has_value());
    CHECK(norm_E1_to_F(in.norm_witness->first) * norm_E2_to_F(in.norm_witness->second) ==
          Rational(-22));

    const KernelReport out = kernel_membership(el(cfg, 1, 0, 0, 1));
    CHECK(!out.in_K1);
    CHECK(!out.in_K2);
    CHECK(!out.in_K3);
    CHECK(!out.in_K4);
    CHECK(!out.in_K5);
    CHECK(!out.decomposition.has_value());
    CHECK(!out.norm_witness.has_value());

    const KernelReport root = kernel_membership(ExtElement::root1(cfg));
    CHECK(root.in_K1);
    CHECK(root.in_K5);

    CHECK_THROWS_AS(kernel_membership(ExtElement::zero(cfg)), Error);
}

TEST_CASE("kernel membership: five flags agree on mixed constructions") {
    std::mt19937_64 rng(404);
    const BiquadConfig cfgs[] = {make_field(2, 3), make_field(-1, -2)};
    for (const auto& cfg : cfgs) {
        int inside = 0, outside = 0;
        for (int trial = 0; trial < 150; ++trial) {
            ExtElement e = ExtElement::one(cfg);
            switch (trial % 4) {
                case 0: e = rnd_nonzero_element(rng, cfg); break;
                case 1:
                    e = rnd_e1_element(rng, cfg) * rnd_e2_element(rng, cfg);
                    break;
                case 2: e = rnd_e1_element(rng, cfg); break;
                case 3: e = rnd_e3_element(rng, cfg); break;
            }
            const KernelReport r = kernel_membership(e);
            CHECK(r.in_K1 == r.in_K2);
            CHECK(r.in_K2 == r.in_K3);
            CHECK(r.in_K3 == r.in_K4);
            CHECK(r.in_K4 == r.in_K5);
            CHECK(r.decomposition.has_value() == r.in_K1);
            (r.in_K1 ? inside : outside) += 1;
            if (trial % 4 == 1 || trial % 4 == 2) CHECK(r.in_K1);
        }
        CHECK(inside > 0);
        CHECK(outside > 0);
    }
}

TEST_CASE("kernel membership: agrees with the group-ring operator form") {
    std::mt19937_64 rng(405);
    const auto cfg = make_field(2, 3);
    // (1 - s1)(1 - s2) as an integral operator on E^x.
    const GroupRingElement op =
        (GroupRingElement::identity() - GroupRingElement::basis(Galois::s1)) *
        (GroupRingElement::identity() - GroupRingElement::basis(Galois::s2));
    for (int trial = 0; trial < 120; ++trial) {
        const ExtElement e = (trial % 2 == 0)
                                 ? rnd_nonzero_element(rng, cfg)
                                 : rnd_e1_element(rng, cfg) * rnd_e2_element(rng, cfg);
        const bool killed = act(op, e) == ExtElement::one(cfg);
        CHECK(killed == kernel_membership(e).in_K1);
    }
}

TEST_CASE("norm product witness: pinned values over (2,3)") {
    const auto cfg = make_field(2, 3);

    const ExtElement e = el(cfg, 1, 1, 0, 0) * el(cfg, 1, 0, 1, 0);
    CHECK(e == el(cfg, 1, 1, 1, 1));
    const auto [g1, g2] = norm_product_witness(e);
    CHECK(g1 == el(cfg, 1, 1, 0, 0));
    CHECK(g2 == el(cfg, 1, 0, 1, 0));
    CHECK(norm_E1_to_F(g1) == Rational(-1));
    CHECK(norm_E2_to_F(g2) == Rational(-2));
    CHECK(norm(NormTarget::E3, e) == ExtElement::from_rational(cfg, 2));

    const auto [s1_, s2_] = norm_product_witness(ExtElement::from_rational(cfg, 7));
    CHECK(norm_E1_to_F(s1_) * norm_E2_to_F(s2_) == Rational(49));

    const auto [w1, w2] = norm_product_witness(el(cfg, 5, 5, 1, 1));
    CHECK(norm_E1_to_F(w1) * norm_E2_to_F(w2) == Rational(-22));

    CHECK_THROWS_AS(norm_product_witness(el(cfg, 1, 0, 0, 1)), Error);
}

TEST_CASE("norm product witness: certifies N_{E/E3} on random kernel elements") {
    std::mt19937_64 rng(406);
    const BiquadConfig cfgs[] = {make_field(2, 3), make_field(Rational(1) / 2, Rational(1) / 3)};
    for (const auto& cfg : cfgs) {
        for (int trial = 0; trial < 100; ++trial) {
            const ExtElement e = rnd_e1_element(rng, cfg) * rnd_e2_element(rng, cfg);
            const auto [g1, g2] = norm_product_witness(e);
            const Rational product = norm_E1_to_F(g1) * norm_E2_to_F(g2);
            CHECK(norm(NormTarget::E3, e) == ExtElement::from_rational(cfg, product));
        }
    }
}

TEST_CASE("coboundary witness: pinned cases over (2,3)") {
    const auto cfg = make_field(2, 3);
    const ExtElement one = ExtElement::one(cfg);
    const ExtElement minus_one = el(cfg, -1, 0, 0, 0);

    const ExtElement beta_trivial = coboundary_witness(crossed_hom_check(one, one));
    CHECK(beta_trivial / galois_apply(Galois::s1, beta_trivial) == one);
    CHECK(beta_trivial / galois_apply(Galois::s2, beta_trivial) == one);

    const ExtElement beta = coboundary_witness(crossed_hom_check(minus_one, one));
    CHECK(beta == ExtElement::root2(cfg));
    CHECK(beta / galois_apply(Galois::s1, beta) == minus_one);
    CHECK(beta / galois_apply(Galois::s2, beta) == one);
}

TEST_CASE("coboundary witness: exact round-trips") {
    std::mt19937_64 rng(407);
    const BiquadConfig cfgs[] = {make_field(2, 3), make_field(-1, 2), make_field(5, 7)};

    // The worked example beta0 = 1 + r1 + r2.
    {
        const auto cfg = make_field(2, 3);
        const ExtElement beta0 = el(cfg, 1, 1, 1, 0);
        const ExtElement a1 = beta0 / galois_apply(Galois::s1, beta0);
        const ExtElement a2 = beta0 / galois_apply(Galois::s2, beta0);
        const ExtElement beta = coboundary_witness(crossed_hom_check(a1, a2));
        CHECK(beta / galois_apply(Galois::s1, beta) == a1);
        CHECK(beta / galois_apply(Galois::s2, beta) == a2);
    }

    for (const auto& cfg : cfgs) {
        for (int trial = 0; trial < 80; ++trial) {
            const ExtElement beta0 = rnd_nonzero_element(rng, cfg);
            const ExtElement a1 = beta0 / galois_apply(Galois::s1, beta0);
            const ExtElement a2 = beta0 / galois_apply(Galois::s2, beta0);
            const ExtElement beta = coboundary_witness(crossed_hom_check(a1, a2));
            CHECK(!beta.is_zero());
            CHECK(beta / galois_apply(Galois::s1, beta) == a1);
            CHECK(beta / galois_apply(Galois::s2, beta) == a2);
            // The s12 value of the crossed homomorphism is also hit: by the
            // cocycle rule it must equal beta / s12(beta).
            const CrossedHom h = crossed_hom_check(a1, a2);
            CHECK(h.value(Galois::s12) == beta / galois_apply(Galois::s12, beta));
        }
    }
}

TEST_CASE("coboundary witness: norm-one inputs that are not coboundaries of F-rationals") {
    std::mt19937_64 rng(408);
    const auto cfg = make_field(2, 3);
    // alpha built directly as sigma-norm-one pairs (not from a common beta0);
    // compatibility is enforced by construction through a shared beta0, so to
    // exercise the t = -1 interior branch plant alpha1 = alpha2 = -1.
    const ExtElement minus_one = el(cfg, -1, 0, 0, 0);
    const ExtElement beta = coboundary_witness(crossed_hom_check(minus_one, minus_one));
    CHECK(beta / galois_apply(Galois::s1, beta) == minus_one);
    CHECK(beta / galois_apply(Galois::s2, beta) == minus_one);
    (void)rng;
}
