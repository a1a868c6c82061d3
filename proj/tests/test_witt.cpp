#include <catch2/catch_amalgamated.hpp>

#include "concordia/alexander.hpp"
#include "concordia/corpus.hpp"
#include "concordia/random_knots.hpp"
#include "concordia/signatures.hpp"
#include "concordia/witt.hpp"
#include "testutil.hpp"

using namespace concordia;
using testutil::lp;

namespace {
RatFunc rf(const LaurentPoly& p) { return RatFunc(p); }
}  // namespace

TEST_CASE("hermitianize") {
    // det V_t = z^r Delta
    HermitianForm kj = hermitianize(knot_K_J());
    REQUIRE(det_ratfunc(kj.matrix()) == rf(z_squared() * lp({{1, -2}, {0, 5}, {-1, -2}})));

    HermitianForm tref = hermitianize(trefoil_R());
    REQUIRE(det_ratfunc(tref.matrix()) == rf(z_squared() * lp({{1, 1}, {0, -1}, {-1, 1}})));

    REQUIRE(hermitianize(unknot()).size() == 0);

    KnotRng rng(3);
    for (int i = 0; i < 500; ++i) {
        HermitianForm h = hermitianize(rng.seifert(3, 3));  // constructor checks hermitian symmetry
        REQUIRE(conj_transpose(h.matrix()) == h.matrix());
    }
}

TEST_CASE("congruence") {
    HermitianForm kj = hermitianize(knot_K_J());
    REQUIRE(congruence(kj, RfMatrix::identity(2, RatFunc::one(), RatFunc::zero())) == kj);

    // scaling a rank-1 form <f> by (g) gives <g gbar f>
    RatFunc f = rf(lp({{1, 1}, {0, -1}, {-1, 1}}));
    RatFunc g = rf(lp({{2, 3}, {0, 1}}));
    HermitianForm rank1 = HermitianForm::diagonal({f});
    RfMatrix p(1, 1, g);
    REQUIRE(congruence(rank1, p).entry(0, 0) == g * g.involute() * f);

    try {
        congruence(kj, RfMatrix(2, 2, RatFunc::zero()));
        FAIL("expected SingularBaseChange");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::SingularBaseChange);
    }
}

TEST_CASE("diagonalize") {
    // already diagonal stays put
    HermitianForm d = HermitianForm::diagonal({rf(lp({{0, 2}})), rf(z_squared())});
    Diagonalization dd = diagonalize(d);
    REQUIRE(dd.diag[0] == rf(lp({{0, 2}})));
    REQUIRE(dd.diag[1] == rf(z_squared()));

    // hyperbolic-type form with zero diagonal
    RatFunc omt = rf(lp({{0, 1}, {1, -1}}));
    HermitianForm hyp(RfMatrix{{RatFunc::zero(), omt}, {omt.involute(), RatFunc::zero()}});
    Diagonalization dh = diagonalize(hyp);
    REQUIRE(dh.diag.size() == 2);
    // determinant preserved up to a norm: product of diag entries / det is a norm
    RatFunc prod = dh.diag[0] * dh.diag[1];
    RatFunc det = det_ratfunc(hyp.matrix());
    RatFunc ratio = prod / det;
    REQUIRE(ratio == ratio.involute());

    // base change reproduces the diagonal exactly, on random forms
    KnotRng rng(10);
    for (int i = 0; i < 60; ++i) {
        SeifertMatrix s = rng.seifert(2, 2, false);
        HermitianForm m = hermitianize(s);
        if (det_ratfunc(m.matrix()).is_zero()) continue;
        Diagonalization di = diagonalize(m);
        RfMatrix re = conj_transpose(di.base_change) * m.matrix() * di.base_change;
        for (size_t r = 0; r < m.size(); ++r)
            for (size_t c = 0; c < m.size(); ++c)
                REQUIRE(re(r, c) == (r == c ? di.diag[r] : RatFunc::zero()));
    }

    // trefoil V_t diagonal entries are both negative at omega = -1
    Diagonalization dt = diagonalize(hermitianize(trefoil_R()));
    REQUIRE(dt.diag.size() == 2);
    for (const auto& e : dt.diag)
        REQUIRE(form_signature_at(HermitianForm::diagonal({e}), 1, 2) == -1);

    try {
        diagonalize(HermitianForm(RfMatrix(2, 2, RatFunc::zero())));
        FAIL("expected SingularForm");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::SingularForm);
    }
}

TEST_CASE("witt_reduce cancellation") {
    RatFunc f = rf(lp({{1, 2}, {0, -3}, {-1, 2}}));
    WittRepresentative r1 = witt_reduce({f, -f});
    REQUIRE(r1.diag.empty());

    // A_t (+) -A_t reduces to nothing after a shared diagonalization
    HermitianForm a_t = hermitianize(knot_K_J());
    Diagonalization da = diagonalize(a_t);
    std::vector<RatFunc> both = da.diag;
    for (const auto& d : da.diag) both.push_back(-d);
    REQUIRE(witt_reduce(both).diag.empty());

    // <Delta^2> rescales to <1> because Delta is symmetric
    LaurentPoly delta = lp({{1, -2}, {0, 5}, {-1, -2}});
    WittRepresentative r2 = witt_reduce({rf(delta * delta), RatFunc(Rational(-1))});
    REQUIRE(r2.diag.empty());

    // <z^2> is a negated norm
    WittRepresentative r3 = witt_reduce({rf(z_squared()), RatFunc(Rational(1))});
    REQUIRE(r3.diag.empty());

    // entries that do not pair stay put
    WittRepresentative r4 = witt_reduce({rf(delta), RatFunc(Rational(1))});
    REQUIRE(r4.diag.size() == 2);

    // reduction never changes the signature profile
    KnotRng rng(12);
    for (int i = 0; i < 30; ++i) {
        SeifertMatrix s = rng.seifert(2, 2, false);
        HermitianForm m = hermitianize(s);
        if (det_ratfunc(m.matrix()).is_zero()) continue;
        Diagonalization di = diagonalize(m);
        std::vector<RatFunc> doubled = di.diag;
        for (const auto& d : di.diag) doubled.push_back(-d);
        doubled.push_back(rf(delta));
        WittRepresentative red = witt_reduce(doubled);
        HermitianForm before = HermitianForm::diagonal({rf(delta)});
        HermitianForm after = HermitianForm::diagonal(red.diag);
        for (auto [a, b] : standard_samples(5))
            REQUIRE(form_signature_at(before, a, b) == form_signature_at(after, a, b));
    }
}

TEST_CASE("metabolizers") {
    LaurentPoly F = lp({{1, 1}, {0, -1}, {-1, 1}});
    LaurentPoly G = LaurentPoly::one();
    LaurentPoly delta = lp({{1, -2}, {0, 5}, {-1, -2}});
    HermitianForm m = HermitianForm::diagonal({rf(F * F * delta), -rf(G * G * delta)});
    REQUIRE(verify_metabolizer(m, {{rf(G), rf(F)}}));

    HermitianForm pm = HermitianForm::diagonal({RatFunc(Rational(1)), RatFunc(Rational(-1))});
    REQUIRE(verify_metabolizer(pm, {{RatFunc::one(), RatFunc::one()}}));

    HermitianForm pp = HermitianForm::diagonal({RatFunc(Rational(1)), RatFunc(Rational(1))});
    REQUIRE_FALSE(verify_metabolizer(pp, {{RatFunc::one(), RatFunc::zero()}}));

    // dependent vectors are rejected even with zero pairings
    HermitianForm four = HermitianForm::diagonal(
        {RatFunc(Rational(1)), RatFunc(Rational(-1)), RatFunc(Rational(1)), RatFunc(Rational(-1))});
    std::vector<RatFunc> v{RatFunc::one(), RatFunc::one(), RatFunc::zero(), RatFunc::zero()};
    REQUIRE_FALSE(verify_metabolizer(four, {v, v}));

    try {
        verify_metabolizer(pm, {{RatFunc::one(), RatFunc::one()}, {RatFunc::one(), RatFunc::zero()}});
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::DimensionMismatch);
    }

    // graph basis of M (+) -M is always a metabolizer
    KnotRng rng(8);
    for (int i = 0; i < 40; ++i) {
        SeifertMatrix s = rng.seifert(1, 2, false);
        HermitianForm mm = hermitianize(s);
        if (det_ratfunc(mm.matrix()).is_zero()) continue;
        size_t n = mm.size();
        HermitianForm dbl = HermitianForm::direct_sum(mm, mm.negated());
        std::vector<std::vector<RatFunc>> basis;
        for (size_t k = 0; k < n; ++k) {
            std::vector<RatFunc> g(2 * n, RatFunc::zero());
            g[k] = RatFunc::one();
            g[n + k] = RatFunc::one();
            basis.push_back(std::move(g));
        }
        REQUIRE(verify_metabolizer(dbl, basis));
    }
}

TEST_CASE("witt classification is sound") {
    // trivially zero class
    HermitianForm hyp = HermitianForm::diagonal({rf(lp({{0, 3}})), rf(lp({{0, -3}}))});
    WittClassification c1 = classify_witt(hyp);
    REQUIRE(c1.verdict == WittVerdict::Trivial);

    // trefoil form is nontrivial with a signature witness
    WittClassification c2 = classify_witt(hermitianize(trefoil_R()));
    REQUIRE(c2.verdict == WittVerdict::Nontrivial);
    REQUIRE_FALSE(c2.witnesses.empty());
}
