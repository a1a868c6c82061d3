#include <catch2/catch_amalgamated.hpp>

#include "concordia/amphicheiral.hpp"
#include "concordia/corpus.hpp"
#include "concordia/random_knots.hpp"
#include "testutil.hpp"

using namespace concordia;
using testutil::im;
using testutil::lp;

TEST_CASE("equivariance checks") {
    AmphicheiralData fam = amphicheiral_sample();
    REQUIRE(check_equivariance(fam.A, fam.T));
    // applying the identity twice: -A^t is equivariant under the same T
    REQUIRE(check_equivariance(-fam.A.transpose(), fam.T));

    REQUIRE(check_equivariance(IntMatrix(2, 2, Integer(0)), im({{0, 1}, {1, 0}})));
    REQUIRE_FALSE(check_equivariance(im({{1, 0}, {0, 1}}), IntMatrix::identity(2, Integer(1))));
    // 2x2 skew block with the swap involution: T A T = -A, not -A^t
    REQUIRE_FALSE(check_equivariance(im({{0, 1}, {-1, 0}}), im({{0, 1}, {1, 0}})));

    KnotRng rng(61);
    for (int i = 0; i < 50; ++i) {
        AmphicheiralData d = rng.amphicheiral(2);
        REQUIRE(check_equivariance(d.A, d.T));
    }
}

TEST_CASE("square factorization on the trivial data") {
    AmphicheiralData d = amphicheiral_sample();
    d.a = {Integer(0), Integer(0), Integer(0), Integer(0)};
    d.b = 0;
    HKCertificate cert = hk_factorize(d);
    REQUIRE(cert.c_of_t.is_zero());
    REQUIRE(cert.delta_identity);
    REQUIRE(cert.delta_plus_minus == cert.delta_minus_plus);  // ratio (0+1)^2 = 1
}

TEST_CASE("square factorization on the generator family") {
    HKCertificate cert = hk_factorize(amphicheiral_sample());
    REQUIRE(cert.c_symmetric);
    REQUIRE(cert.lower_block_identity);
    REQUIRE(cert.d_zero);
    REQUIRE(cert.block_diagonal_identity);
    REQUIRE(cert.delta_identity);
    REQUIRE(cert.square_gate);
    REQUIRE(cert.F.has_value());
    REQUIRE(cert.G.has_value());
    // the ratio really is the claimed square
    RatFunc cp1 = cert.c_of_t + RatFunc::one();
    REQUIRE(RatFunc(cert.delta_plus_minus) == cp1 * cp1 * RatFunc(cert.delta_minus_plus));

    KnotRng rng(62);
    for (int i = 0; i < 15; ++i) {
        HKCertificate c = hk_factorize(rng.amphicheiral(1));
        REQUIRE(c.delta_identity);
        REQUIRE((*c.F * *c.F == c.delta_plus_minus ||
                 equal_up_to_units(*c.F * *c.F, c.delta_plus_minus)));
    }

    // corrupted involution fails upstream
    AmphicheiralData bad = amphicheiral_sample();
    bad.T(0, 0) = 1;
    try {
        hk_factorize(bad);
        FAIL("expected EquivarianceViolated");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::EquivarianceViolated);
    }
}

TEST_CASE("long certificates") {
    // the trivial instance: F = G = 1, delta = 1, metabolizer {(1,1)}
    HermitianForm m = HermitianForm::diagonal({RatFunc(Rational(1)), RatFunc(Rational(-1))});
    REQUIRE(verify_metabolizer(m, {{RatFunc::one(), RatFunc::one()}}));

    // explicit example: F = t - 1 + t^-1, G = 1, arbitrary symmetric delta
    LaurentPoly F = lp({{1, 1}, {0, -1}, {-1, 1}});
    LaurentPoly delta = lp({{2, 1}, {0, 3}, {-2, 1}});
    HermitianForm m2 = HermitianForm::diagonal({RatFunc(F * F * delta), RatFunc(-delta)});
    REQUIRE(verify_metabolizer(m2, {{RatFunc::one(), RatFunc(F)}}));

    LongCertificate lc = long_certificate(amphicheiral_sample(), 15);
    REQUIRE(lc.metabolizer_ok);
    REQUIRE(lc.c_block_trivial_ok);
    REQUIRE(lc.profile_zero_ok);
    REQUIRE(lc.verified);

    KnotRng rng(63);
    for (int i = 0; i < 8; ++i) REQUIRE(long_certificate(rng.amphicheiral(1), 8).verified);
}

TEST_CASE("signature profiles agree across the paired change") {
    HKCertificate cert = hk_factorize(amphicheiral_sample());
    HermitianForm v1 = hermitianize(cert.v_plus_minus);
    HermitianForm v0 = hermitianize(cert.v_minus_plus);
    for (auto [a, b] : standard_samples(20))
        REQUIRE(form_signature_at(v1, a, b) == form_signature_at(v0, a, b));
}

TEST_CASE("paired crossing walks") {
    REQUIRE(paired_crossing_walk({}).verified);

    // one-step walk: the generator with (m, n) = (1, 0) ends at Delta = 1
    AmphicheiralData step = amphicheiral_sample();
    PairedWalkReport one = paired_crossing_walk({step}, 10);
    REQUIRE(one.verified);
    REQUIRE(one.steps.size() == 1);

    // two-step walk: a nontrivial step chains into the trivial one
    AmphicheiralData tail = amphicheiral_sample();
    tail.a = {Integer(0), Integer(0), Integer(0), Integer(0)};
    tail.b = 0;
    PairedWalkReport two = paired_crossing_walk({step, tail}, 10);
    REQUIRE(two.verified);

    // a final step with nontrivial Delta(V^0) breaks the walk
    AmphicheiralData off = amphicheiral_generator(Integer(2), Integer(-1),
                                                  {Integer(0), Integer(0), Integer(0), Integer(0)},
                                                  Integer(0), Integer(-1));
    try {
        paired_crossing_walk({off}, 10);
        FAIL("expected ChainMismatch");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::ChainMismatch);
    }
}
