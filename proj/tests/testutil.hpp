#pragma once

// Shared helpers and independent oracles for the test suites.  Oracles here
// must not share a computation path with the library code they check.

#include <cstdint>
#include <vector>

#include "concordia/interval.hpp"
#include "concordia/laurent.hpp"
#include "concordia/numbers.hpp"
#include "concordia/random_knots.hpp"

namespace testutil {

using namespace concordia;

inline IntMatrix im(std::initializer_list<std::initializer_list<int>> rows) {
    size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (int v : row) m(i, j++) = Integer(v);
        ++i;
    }
    return m;
}

inline LaurentPoly lp(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
    return p;
}

// Multiplication oracle: two polynomials are equal iff they agree at more
// rational points than their degree span.  Checks a product against
// pointwise evaluation, which exercises none of the convolution code.
inline bool product_matches_pointwise(const LaurentPoly& p, const LaurentPoly& q, const LaurentPoly& claimed) {
    std::int64_t span = (p.max_exp() - p.min_exp()) + (q.max_exp() - q.min_exp()) + 1;
    for (std::int64_t k = 1; k <= span + 1; ++k) {
        Rational x(k, k + 7);  // distinct nonzero points
        if (claimed.eval(x) != p.eval(x) * q.eval(x)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Taylor-series circle oracle (independent of the Chebyshev bisection path).

// Enclosure of pi via Machin's formula with alternating arctan tails.
inline RatInterval pi_interval(int terms) {
    auto arctan_inv = [&](std::int64_t inv) {  // arctan(1/inv)
        Rational x(1, inv), x2 = x * x, term = x, sum(0);
        int sign = 1;
        RatInterval out;
        for (int k = 0; k < terms; ++k) {
            Rational contrib = term / Rational(2 * k + 1);
            sum += sign > 0 ? contrib : -contrib;
            term *= x2;
            sign = -sign;
        }
        Rational tail = term / Rational(2 * terms + 1);  // alternating: next term bounds the error
        return RatInterval(sum - tail, sum + tail);
    };
    RatInterval a5 = arctan_inv(5), a239 = arctan_inv(239);
    return Rational(16) * a5 - Rational(4) * a239;
}

// cos / sin of 2*pi*a/b by Taylor series at a dyadic midpoint of the angle
// enclosure, with derivative and truncation padding.  Rounding the midpoint
// to 48 bits keeps the power denominators bounded.
inline std::pair<RatInterval, RatInterval> taylor_circle(std::int64_t a, std::int64_t b, int terms = 40) {
    static const RatInterval pi = pi_interval(30);
    RatInterval theta = Rational(2 * a, b) * pi;
    Rational exact_mid = (theta.lo + theta.hi) / 2;
    Integer scale = Integer(1) << 48;
    Rational mid = make_rational(num(exact_mid * scale) / den(exact_mid * scale), scale);
    Rational halfwidth = (theta.hi - theta.lo) / 2 + Rational(1, scale);

    Rational m2 = mid * mid;
    Rational cos_sum(0), sin_sum(0), pow(1);  // pow = mid^(2k) / (2k)!
    Rational sin_factor = mid;
    int sign = 1;
    Rational fact_term = pow;
    for (int k = 0; k < terms; ++k) {
        cos_sum += sign > 0 ? fact_term : -fact_term;
        Rational sin_term = fact_term * mid / Rational(2 * k + 1);
        sin_sum += sign > 0 ? sin_term : -sin_term;
        fact_term = fact_term * m2 / Rational((2 * k + 1) * (2 * k + 2));
        sign = -sign;
    }
    (void)sin_factor;
    (void)pow;
    // |mid| < 7 and terms = 40: remaining terms decay faster than 4^-k, so
    // twice the first omitted term bounds both truncations; the Lipschitz
    // constant of cos/sin is 1, covering the angle halfwidth.
    Rational trunc = Rational(2) * fact_term * (Rational(1) + mid.sign() * mid);
    if (trunc < 0) trunc = -trunc;
    Rational pad = trunc + halfwidth;
    return {RatInterval(cos_sum - pad, cos_sum + pad), RatInterval(sin_sum - pad, sin_sum + pad)};
}

inline bool intervals_overlap(const RatInterval& x, const RatInterval& y) {
    return x.lo <= y.hi && y.lo <= x.hi;
}

}  // namespace testutil
