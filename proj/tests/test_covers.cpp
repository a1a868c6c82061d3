#include <catch2/catch_amalgamated.hpp>

#include "concordia/corpus.hpp"
#include "concordia/covers.hpp"
#include "concordia/random_knots.hpp"
#include "testutil.hpp"

using namespace concordia;
using testutil::im;

TEST_CASE("cover homology of the named examples") {
    CoverHomology kj3 = cover_homology(knot_K_J(), 3);
    REQUIRE(kj3.presentation == im({{7, 0}, {0, 7}}));
    REQUIRE(kj3.snf == std::vector<Integer>{Integer(7), Integer(7)});
    REQUIRE(kj3.finite);
    REQUIRE(kj3.order == 49);

    CoverHomology tref2 = cover_homology(trefoil_R(), 2);
    REQUIRE(tref2.presentation == im({{-1, 2}, {-2, 1}}));
    REQUIRE(tref2.snf == std::vector<Integer>{Integer(1), Integer(3)});
    REQUIRE(tref2.order == 3);

    CoverHomology kj2 = cover_homology(knot_K_J(), 2);
    REQUIRE(kj2.order == 9);
    REQUIRE(kj2.snf == std::vector<Integer>{Integer(3), Integer(3)});

    CoverHomology triv = cover_homology(unknot(), 5);
    REQUIRE(triv.order == 1);
}

TEST_CASE("order oracle on random inputs") {
    KnotRng rng(31);
    for (int i = 0; i < 60; ++i) {
        SeifertMatrix v = rng.seifert(3, 2);
        for (std::int64_t q : {2, 3, 5}) {
            CoverHomology c = cover_homology(v, q);  // throws OracleMismatch on disagreement
            REQUIRE(c.finite);                       // prime-power degree: never infinite for knots
        }
    }
}

TEST_CASE("deck action") {
    DeckAction d = deck_action(knot_K_J(), 3, 7);
    REQUIRE(d.eigenspaces.size() == 2);
    std::vector<std::int64_t> values;
    for (const auto& [lambda, basis] : d.eigenspaces) {
        values.push_back(lambda);
        REQUIRE(basis.size() == 1);
        REQUIRE(pow_mod(lambda, 3, 7) == 1);
    }
    std::sort(values.begin(), values.end());
    REQUIRE(values == std::vector<std::int64_t>{2, 4});

    // connected sum doubles each eigenspace
    DeckAction dbl = deck_action(connected_sum(knot_K_J(), knot_K_J()), 3, 7);
    for (const auto& [lambda, basis] : dbl.eigenspaces) REQUIRE(basis.size() == 2);

    // trefoil double cover: the action is -1 on the Z_3 part
    DeckAction tr = deck_action(trefoil_R(), 2, 3);
    REQUIRE(tr.eigenspaces.size() == 1);
    REQUIRE(tr.eigenspaces[0].first == 2);  // -1 mod 3
    REQUIRE(tr.action.rows() == 1);
    REQUIRE(tr.action(0, 0) == 2);

    // V singular mod p is refused
    SeifertMatrix awkward = SeifertMatrix::validate(
        IntMatrix::block_diag(im({{1, 3}, {2, 1}}), im({{3, 4}, {3, 3}})));
    try {
        deck_action(awkward, 2, 3);
        FAIL("expected NotInvertibleModP");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NotInvertibleModP);
    }

    // p must divide the order
    try {
        deck_action(knot_K_J(), 3, 5);
        FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::PreconditionFailed);
    }
}

TEST_CASE("two-fold linking form") {
    LinkingFormZp kj = linking_form_2fold(knot_K_J(), 3);
    REQUIRE(kj.dim == 2);
    // hyperbolic gram, exactly as p (V + V^t)^{-1} predicts
    REQUIRE(kj.gram(0, 0) == 0);
    REQUIRE(kj.gram(1, 1) == 0);
    REQUIRE(kj.gram(0, 1) * kj.gram(1, 0) % 3 == 1);

    LinkingFormZp tref = linking_form_2fold(trefoil_R(), 3);
    REQUIRE(tref.dim == 1);

    // block sums add dimensions
    LinkingFormZp sum = linking_form_2fold(connected_sum(knot_K_J(), trefoil_R()), 3);
    REQUIRE(sum.dim == 3);

    // exponent p^2 is rejected
    SeifertMatrix nine = SeifertMatrix::validate(im({{2, 3}, {2, 2}}));
    try {
        linking_form_2fold(nine, 3);
        FAIL("expected NotElementaryAbelian");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NotElementaryAbelian);
    }
}

TEST_CASE("metabolizer enumeration") {
    auto hyperbolic = [](std::int64_t p) {
        LinkingFormZp f;
        f.p = p;
        f.dim = 2;
        f.gram = ZpMatrix{{0, 1}, {1, 0}};
        return f;
    };
    for (std::int64_t p : {3, 5, 7}) {
        auto mets = enumerate_metabolizers(hyperbolic(p), std::nullopt, false);
        REQUIRE(mets.size() == 2);  // the two coordinate lines
        // brute-force cross-check over all lines of Z_p^2
        size_t isotropic_lines = 0;
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 0; y < p; ++y) {
                if (x == 0 && y == 0) continue;
                if (x != 0 && x != 1) continue;  // canonical representatives only
                if (x == 0 && y != 1) continue;
                if (mod_i64(2 * x * y, p) == 0) ++isotropic_lines;
            }
        REQUIRE(isotropic_lines == mets.size());
        for (const auto& m : mets) REQUIRE(m.basis.size() == 1);
    }

    LinkingFormZp pm;
    pm.p = 3;
    pm.dim = 2;
    pm.gram = ZpMatrix{{1, 0}, {0, 2}};  // diag(1, -1)
    auto mets = enumerate_metabolizers(pm, std::nullopt, false);
    REQUIRE(mets.size() == 2);  // spans of (1,1) and (1,-1)

    LinkingFormZp zero;
    zero.p = 3;
    zero.dim = 0;
    zero.gram = ZpMatrix(0, 0, 0);
    REQUIRE(enumerate_metabolizers(zero, std::nullopt, false).size() == 1);

    // equivariance filter: the swap deck action keeps only symmetric lines
    ZpMatrix swap{{0, 1}, {1, 0}};
    auto equi = enumerate_metabolizers(pm, swap, true);
    REQUIRE(equi.size() == 2);  // both (1,1) and (1,-1) are swap-stable
    ZpMatrix scale{{1, 0}, {0, 2}};
    auto filtered = enumerate_metabolizers(pm, scale, true);
    REQUIRE(filtered.empty());  // diag(1,2) maps each isotropic line to the other

    // a deck action mixing the lines drops them
    LinkingFormZp hyp3 = hyperbolic(3);
    ZpMatrix mix{{0, 1}, {1, 0}};
    auto mixed = enumerate_metabolizers(hyp3, mix, true);
    REQUIRE(mixed.empty());  // swap exchanges the two isotropic lines
}
