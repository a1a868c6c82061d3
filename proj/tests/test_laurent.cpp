#include <catch2/catch_amalgamated.hpp>

#include "concordia/interval.hpp"
#include "concordia/laurent.hpp"
#include "concordia/random_knots.hpp"
#include "testutil.hpp"

using namespace concordia;
using testutil::lp;

TEST_CASE("ring laws and involution on random triples") {
    KnotRng rng(11);
    auto rnd = [&]() {
        LaurentPoly p;
        for (int k = 0; k < 5; ++k) p.add_term(rng.uniform(-6, 6), Rational(rng.uniform(-9, 9)));
        return p;
    };
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly p = rnd(), q = rnd(), r = rnd();
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p * q == q * p);
        // involute is a ring automorphism and an involution
        REQUIRE((p * q).involute() == p.involute() * q.involute());
        REQUIRE(p.involute().involute() == p);
    }
}

TEST_CASE("basic identities") {
    REQUIRE(lp({{1, 1}}) + lp({{1, -1}}) == LaurentPoly::zero());
    LaurentPoly sym = lp({{1, -2}, {0, 5}, {-1, -2}});
    REQUIRE(sym.involute() == sym);

    LaurentPoly prod = lp({{1, 1}, {0, -1}, {-1, 1}}) * lp({{1, 1}, {0, 1}, {-1, 1}});
    REQUIRE(testutil::product_matches_pointwise(lp({{1, 1}, {0, -1}, {-1, 1}}), lp({{1, 1}, {0, 1}, {-1, 1}}), prod));
    REQUIRE(prod.coeff(2) == 1);
    REQUIRE(prod.coeff(0) == 1);
    REQUIRE(prod.coeff(-2) == 1);
}

TEST_CASE("textual form round trips exactly") {
    LaurentPoly p = lp({{1, -2}, {0, 5}, {-1, -2}});
    REQUIRE(p.to_string() == "-2*t^1 + 5*t^0 + -2*t^-1");
    REQUIRE(LaurentPoly::parse("-2*t^1 + 5*t^0 + -2*t^-1") == p);
    REQUIRE(LaurentPoly::parse("1*t^0") == LaurentPoly::one());
    REQUIRE(LaurentPoly::parse("0*t^0").is_zero());
    REQUIRE(LaurentPoly::parse("1/2*t^3 + -1/2*t^-3") == LaurentPoly{{3, Rational(1, 2)}, {-3, Rational(-1, 2)}});
    REQUIRE_THROWS_AS(LaurentPoly::parse("2t^1"), Error);
    REQUIRE_THROWS_AS(LaurentPoly::parse("2*t^1 +3*t^0"), Error);
    REQUIRE_THROWS_AS(LaurentPoly::parse("x*t^1"), Error);

    KnotRng rng(5);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly p2;
        for (int k = 0; k < 4; ++k) p2.add_term(rng.uniform(-9, 9), Rational(rng.uniform(-99, 99)));
        REQUIRE(LaurentPoly::parse(p2.to_string()) == p2);
    }
}

TEST_CASE("conway conversion") {
    // z^2 = t - 2 + t^(-1) under the fixed sign convention
    REQUIRE(z_squared() == lp({{1, 1}, {0, -2}, {-1, 1}}));

    ConwayPoly one = to_conway(LaurentPoly::one());
    REQUIRE(one.coeff(0) == 1);
    REQUIRE(one.terms().size() == 1);

    ConwayPoly tref = to_conway(lp({{1, 1}, {0, -1}, {-1, 1}}));
    REQUIRE(tref.coeff(2) == 1);
    REQUIRE(tref.coeff(0) == 1);
    REQUIRE(tref.terms().size() == 2);  // z^2 + 1

    ConwayPoly fig8 = to_conway(lp({{1, -1}, {0, 3}, {-1, -1}}));
    REQUIRE(fig8.coeff(2) == -1);
    REQUIRE(fig8.coeff(0) == 1);  // -z^2 + 1

    REQUIRE_THROWS_AS(to_conway(lp({{1, 1}})), Error);  // not symmetric
    try {
        to_conway(lp({{1, 1}}));
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NotSymmetric);
    }
    // symmetric but with non-integer expansion
    LaurentPoly half{{1, Rational(1, 2)}, {-1, Rational(1, 2)}};
    try {
        to_conway(half);
        FAIL("expected NotInImage");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NotInImage);
    }

    // back substitution inverts to_conway on its domain
    KnotRng rng(7);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p;
        for (int k = 0; k <= 3; ++k) p += Rational(rng.uniform(-9, 9)) * z_squared().pow(k);
        REQUIRE(to_conway(p).back_substitute() == p);
    }
}

TEST_CASE("square detection up to units") {
    LaurentPoly tref = lp({{1, 1}, {0, -1}, {-1, 1}});
    auto f = is_square_up_to_units(tref * tref);
    REQUIRE(f.has_value());
    REQUIRE(*f == tref);
    REQUIRE(f->eval(1) >= 0);

    auto one = is_square_up_to_units(LaurentPoly::one());
    REQUIRE(one.has_value());
    REQUIRE(*one == LaurentPoly::one());

    REQUIRE_FALSE(is_square_up_to_units(tref).has_value());

    // sign and unit shifts are absorbed
    REQUIRE(is_square_up_to_units(-(tref * tref).shifted(3)).has_value());
    REQUIRE(*is_square_up_to_units(-(tref * tref).shifted(3)) == tref);

    // antisymmetric square roots are rejected (no symmetric F exists)
    LaurentPoly anti = lp({{1, 1}, {-1, -1}});
    REQUIRE_FALSE(is_square_up_to_units(anti * anti).has_value());

    KnotRng rng(13);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f2;
        for (int k = 0; k < 3; ++k) f2.add_term(rng.uniform(-3, 3), Rational(rng.uniform(-5, 5)));
        f2 += f2.involute();  // make symmetric
        if (f2.is_zero()) continue;
        auto r = is_square_up_to_units(f2 * f2);
        REQUIRE(r.has_value());
        REQUIRE(equal_up_to_units(*r * *r, f2 * f2));
    }
}

TEST_CASE("eval_circle encloses exact values") {
    // -2t + 5 - 2t^(-1) at a third root of unity: omega + omega^2 = -1
    ComplexInterval v = eval_circle(lp({{1, -2}, {0, 5}, {-1, -2}}), 1, 3, 2);
    REQUIRE(v.re.contains(Rational(7)));
    REQUIRE(v.im.contains_zero());

    ComplexInterval c1 = eval_circle(LaurentPoly::one(), 2, 7, 2);
    REQUIRE(c1.re.is_exact());
    REQUIRE(c1.re.lo == 1);
    REQUIRE(c1.im.is_exact());
    REQUIRE(c1.im.lo == 0);

    ComplexInterval m1 = eval_circle(lp({{1, 1}, {0, -1}, {-1, 1}}), 1, 2, 2);
    REQUIRE(m1.re.contains(Rational(-3)));
    REQUIRE(m1.im.contains_zero());

    // width shrinks monotonically with the precision parameter
    LaurentPoly p = lp({{3, 2}, {1, -1}, {0, 4}, {-2, 7}});
    Rational prev_width(-1);
    for (unsigned prec = 1; prec <= 4; ++prec) {
        ComplexInterval w = eval_circle(p, 2, 11, prec);
        if (prev_width >= 0) REQUIRE(w.re.width() <= prev_width);
        prev_width = w.re.width();
    }
}

TEST_CASE("eval_circle agrees with the Taylor oracle") {
    KnotRng rng(3);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly p;
        for (int k = 0; k < 4; ++k) p.add_term(rng.uniform(-5, 5), Rational(rng.uniform(-9, 9)));
        std::int64_t b = rng.uniform(1, 12);
        std::int64_t a = rng.uniform(0, b - 1);
        ComplexInterval fast = eval_circle(p, a, b, 2);
        RatInterval ore, oim;
        for (const auto& [k, c] : p.terms()) {
            auto [tc, ts] = testutil::taylor_circle(mod_i64(k * a, b), b);
            ore += c * tc;
            oim += c * ts;
        }
        REQUIRE(testutil::intervals_overlap(fast.re, ore));
        REQUIRE(testutil::intervals_overlap(fast.im, oim));
    }
}

TEST_CASE("certified signs on the circle") {
    REQUIRE(certified_sign_on_circle(lp({{1, -2}, {0, 5}, {-1, -2}}), 1, 3) == 1);
    REQUIRE(certified_sign_on_circle(lp({{1, 1}, {0, -1}, {-1, 1}}), 1, 2) == -1);
    // denominators with no small structure still certify
    REQUIRE(certified_sign_on_circle(lp({{1, 1}, {0, -2}, {-1, 1}}), 3, 17) == -1);  // z^2 < 0 on the circle
}
