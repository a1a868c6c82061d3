#include <catch2/catch_amalgamated.hpp>

#include "concordia/concordance.hpp"
#include "concordia/corpus.hpp"
#include "concordia/random_knots.hpp"
#include "testutil.hpp"

using namespace concordia;
using testutil::lp;

TEST_CASE("alexander polynomials") {
    REQUIRE(alexander(knot_K_J()) == lp({{1, -2}, {0, 5}, {-1, -2}}));
    REQUIRE(alexander(unknot()) == LaurentPoly::one());
    REQUIRE(alexander(trefoil_R()) == lp({{1, 1}, {0, -1}, {-1, 1}}));
    REQUIRE(alexander(figure_eight()) == lp({{1, -1}, {0, 3}, {-1, -1}}));

    try {
        alexander(crossing_triple(unknot(), {}, Integer(0)).smooth);
        FAIL("expected OddRank");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::OddRank);
    }

    KnotRng rng(51);
    for (int i = 0; i < 100; ++i) {
        SeifertMatrix v = rng.seifert(2, 3), w = rng.seifert(2, 3);
        // mirror leaves the normalized polynomial fixed; sums multiply
        REQUIRE(alexander(mirror(v)) == alexander(v));
        REQUIRE(alexander(connected_sum(v, w)) == alexander(v) * alexander(w));
    }
}

TEST_CASE("skein relation") {
    CrossingTriple t = crossing_triple(unknot(), {}, Integer(-1));
    ConwayPoly cp = conway(t.plus);
    REQUIRE(cp.coeff(2) == 1);
    REQUIRE(cp.coeff(0) == 1);  // z^2 + 1
    REQUIRE(conway(t.minus).coeff(0) == 1);
    ConwayPoly cs = conway(t.smooth);
    REQUIRE(cs.coeff(1) == 1);
    REQUIRE(cs.terms().size() == 1);  // exactly z
    REQUIRE(skein_verify(t));

    KnotRng rng(52);
    for (int i = 0; i < 200; ++i) REQUIRE(skein_verify(rng.triple(2, 3)));

    // a = 0 decouples: both polynomials share the base factor
    SeifertMatrix base = trefoil_R();
    CrossingTriple dec = crossing_triple(base, {Integer(0), Integer(0)}, Integer(-1));
    REQUIRE(alexander(dec.plus) == alexander(base) * lp({{1, 1}, {0, -1}, {-1, 1}}));
    REQUIRE(alexander(dec.minus) == alexander(base));
}

TEST_CASE("s-equivalence invariance") {
    REQUIRE(s_equivalence_invariance(unknot(), {}, Integer(0)));
    KnotRng rng(53);
    for (int i = 0; i < 200; ++i) {
        SeifertMatrix a = rng.seifert(2, 3);
        REQUIRE(s_equivalence_invariance(a, rng.column(a.size(), 3), Integer(rng.uniform(-3, 3))));
    }
}

TEST_CASE("crossing difference certificate: unknot to trefoil") {
    CrossingTriple t = crossing_triple(unknot(), {}, Integer(-1));
    CrossingDifferenceCertificate cert = crossing_difference(t, 20);
    REQUIRE(cert.verdict == CertVerdict::Verified);
    REQUIRE(cert.qupoly_ok);
    REQUIRE(cert.cancellation_ok);
    REQUIRE(cert.claimed_class.entry(0, 0) == RatFunc(lp({{1, 1}, {0, -1}, {-1, 1}})));
    REQUIRE(cert.claimed_class.entry(1, 1) == RatFunc(Rational(-1)));
    REQUIRE(form_signature_at(cert.claimed_class, 1, 2) == -2);
    REQUIRE(tristram_levine(t.plus, 1, 2).value - tristram_levine(t.minus, 1, 2).value == -2);
}

TEST_CASE("crossing difference certificate: equal polynomials") {
    // a = 0, b = 0 on a nontrivial base: Delta+ = Delta- and c(t) = 0
    CrossingTriple t = crossing_triple(knot_K_J(), {Integer(0), Integer(0)}, Integer(0));
    CrossingDifferenceCertificate cert = crossing_difference(t, 10);
    REQUIRE(cert.c_of_t.is_zero());
    REQUIRE(cert.delta_plus == cert.delta_minus);
    REQUIRE(cert.verdict == CertVerdict::Verified);
}

TEST_CASE("crossing difference certificate: random triples") {
    KnotRng rng(54);
    for (int i = 0; i < 25; ++i) {
        CrossingTriple t = rng.triple(1, 2);
        CrossingDifferenceCertificate cert = crossing_difference(t, 10);
        REQUIRE(cert.verdict == CertVerdict::Verified);
        // Murasugi-style consistency at omega = -1
        int claimed = form_signature_at(cert.claimed_class, 1, 2);
        REQUIRE(claimed ==
                tristram_levine(t.plus, 1, 2).value - tristram_levine(t.minus, 1, 2).value);
    }
}

TEST_CASE("genus-2 mutation invariance") {
    Genus2MutationReport rep = mutation_invariance_genus2(genus2_sample(), 15);
    REQUIRE(rep.verdict == CertVerdict::Verified);
    REQUIRE(rep.alexander_equal);
    REQUIRE(rep.alpha_identity_ok);
    REQUIRE(rep.block_reduction_ok);
    REQUIRE(rep.witt_trivial_ok);

    KnotRng rng(55);
    for (int i = 0; i < 20; ++i) {
        Genus2MutationReport r = mutation_invariance_genus2(rng.genus2_pair(2), 8);
        REQUIRE(r.verdict == CertVerdict::Verified);
    }
}

TEST_CASE("mutation chains") {
    CrossingTriple t1 = crossing_triple(trefoil_R(), {Integer(0), Integer(0)}, Integer(-1));
    CrossingTriple t2 = crossing_triple(unknot(), {}, Integer(-1));
    // two levels: trefoil#trefoil -> trefoil -> unknot, identical mutant side
    REQUIRE(mutation_chain_invariance({{t1, t1}, {t2, t2}}, 8));
    REQUIRE(mutation_chain_invariance({{t2, t2}}, 8));
    REQUIRE(mutation_chain_invariance({}, 8));

    // corrupted level: different Alexander polynomials across the pair
    CrossingTriple bad = crossing_triple(figure_eight(), {Integer(0), Integer(0)}, Integer(-1));
    try {
        mutation_chain_invariance({{t1, bad}}, 8);
        FAIL("expected ChainMismatch");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::ChainMismatch);
    }
    // non-telescoping chain
    try {
        mutation_chain_invariance({{t2, t2}, {t1, t1}}, 8);
        FAIL("expected ChainMismatch");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::ChainMismatch);
    }
}
