#pragma once

// Certified enclosures of Laurent-polynomial values at roots of unity.
//
// The only irrational seeds are cos(pi*m/n).  Each seed is bracketed between
// dyadic rationals by bisection on the Chebyshev polynomial U_{n-1} (whose
// roots are exactly cos(pi*j/n), j = 1..n-1, all simple), so every endpoint
// is exact and refinement is nested: widths shrink monotonically as the
// requested precision grows.  Everything downstream is exact rational
// interval arithmetic, no rounding anywhere.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/laurent.hpp"
#include "concordia/numbers.hpp"

namespace concordia {

struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) fail(ErrorKind::Internal, "inverted interval");
    }
    static RatInterval exact(const Rational& v) { return RatInterval(v, v); }

    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_exact() const { return lo == hi; }

    // Certified sign: nullopt while the enclosure still straddles zero.
    std::optional<int> sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (lo == 0 && hi == 0) return 0;
        return std::nullopt;
    }

    RatInterval operator-() const { return RatInterval(-hi, -lo); }
    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) { return a + (-b); }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rational lo = p1, hi = p1;
        for (const Rational& p : {p2, p3, p4}) {
            if (p < lo) lo = p;
            if (p > hi) hi = p;
        }
        return RatInterval(lo, hi);
    }
    friend RatInterval operator*(const Rational& c, const RatInterval& a) {
        return c >= 0 ? RatInterval(c * a.lo, c * a.hi) : RatInterval(c * a.hi, c * a.lo);
    }
    RatInterval& operator+=(const RatInterval& o) { return *this = *this + o; }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
};

struct ComplexInterval {
    RatInterval re, im;
};

// Certification cap, in decimal digits of seed precision.  Overridable via
// the CONCORDIA_PRECISION_CAP environment variable.
inline unsigned precision_cap_digits() {
    static unsigned cached = [] {
        if (const char* env = std::getenv("CONCORDIA_PRECISION_CAP")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<unsigned>(v);
        }
        return 4096u;
    }();
    return cached;
}

inline unsigned precision_cap_bits() {
    return static_cast<unsigned>(precision_cap_digits() * 3.3220) + 16;
}

// Starting working precision for sign-refinement loops (they double until
// certified, so this is a performance knob, not a correctness one).
inline unsigned& default_seed_bits() {
    static unsigned bits = 64;
    return bits;
}
inline void set_default_seed_bits(unsigned bits) {
    default_seed_bits() = bits < 16 ? 16 : bits;
}

namespace detail {

// Coefficients of the Chebyshev polynomial U_{n-1} (integer).
inline std::vector<Integer> chebyshev_u_coeffs(std::int64_t n1) {
    std::vector<Integer> prev{1};       // U_0
    if (n1 == 0) return prev;
    std::vector<Integer> cur{0, 2};     // U_1 = 2x
    for (std::int64_t k = 2; k <= n1; ++k) {
        std::vector<Integer> next(static_cast<size_t>(k + 1), Integer(0));
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline Rational eval_int_poly(const std::vector<Integer>& coeffs, const Rational& x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

struct SeedBracket {
    Rational lo, hi;
    int sign_lo = 0;           // sign of U at lo (nonzero)
    bool exact = false;        // hit the root exactly (rational cosine)
    std::vector<Integer> u;    // U_{n-1} coefficients
};

// Shared seed cache; brackets only ever shrink, so refinement is nested.
inline std::map<std::pair<std::int64_t, std::int64_t>, SeedBracket>& seed_cache() {
    static std::map<std::pair<std::int64_t, std::int64_t>, SeedBracket> cache;
    return cache;
}
inline std::mutex& seed_mutex() {
    static std::mutex m;
    return m;
}

inline SeedBracket make_bracket(std::int64_t m, std::int64_t n) {
    SeedBracket b;
    b.u = chebyshev_u_coeffs(n - 1);
    // Adjacent roots of U_{n-1} are >= 1 - cos(pi/n) >= 1/(2n^2) apart, so a
    // bracket narrower than 1/(4n^2) holds at most one root.
    Rational pad(1, 4 * Integer(n) * Integer(n));
    if (pad > Rational(1, Integer(1) << 30)) pad = Rational(1, Integer(1) << 30);
    double approx = std::cos(M_PI * static_cast<double>(m) / static_cast<double>(n));
    Rational guess(approx);
    Rational lo = guess - pad, hi = guess + pad;
    if (lo < -1) lo = -1;
    if (hi > 1) hi = 1;
    Rational vlo = eval_int_poly(b.u, lo), vhi = eval_int_poly(b.u, hi);
    if (vlo != 0 && vhi != 0 && vlo.sign() != vhi.sign()) {
        b.lo = lo;
        b.hi = hi;
        b.sign_lo = vlo.sign();
        return b;
    }
    // Fallback: locate the m-th sign change from the right on a uniform grid
    // finer than the root separation.  After the rational special cases the
    // target root is irrational (Niven), but other roots can be rational and
    // may land on a grid point; nudge such samples.
    std::int64_t steps = 8 * n * n;
    while (true) {
        std::vector<std::pair<Rational, Rational>> changes;  // ascending
        Rational prev_x(-1);
        Rational prev_v = eval_int_poly(b.u, prev_x);
        for (std::int64_t i = 1; i <= steps; ++i) {
            Rational x = Rational(-1) + Rational(2 * i, steps);
            Rational v = eval_int_poly(b.u, x);
            if (v == 0) {
                x += Rational(1, 3 * steps);
                v = eval_int_poly(b.u, x);
            }
            if (prev_v != 0 && v != 0 && prev_v.sign() != v.sign()) changes.emplace_back(prev_x, x);
            prev_x = x;
            prev_v = v;
        }
        if (static_cast<std::int64_t>(changes.size()) == n - 1) {
            auto [lo2, hi2] = changes[static_cast<size_t>(n - 1 - m)];
            b.lo = lo2;
            b.hi = hi2;
            b.sign_lo = eval_int_poly(b.u, lo2).sign();
            return b;
        }
        steps *= 2;
        if (steps > (1LL << 40)) fail(ErrorKind::Internal, "seed isolation failed");
    }
}

}  // namespace detail

// Certified enclosure of cos(pi * m / n), n >= 1, width <= 2^-bits.
inline RatInterval cos_pi_frac(std::int64_t m, std::int64_t n, unsigned bits) {
    if (n <= 0) fail(ErrorKind::Internal, "cos_pi_frac needs positive denominator");
    m = mod_i64(m, 2 * n);
    if (m > n) m = 2 * n - m;
    std::int64_t g = gcd_i64(m == 0 ? n : m, n);
    m /= g;
    n /= g;
    if (m == 0) return RatInterval::exact(Rational(1));
    if (m == n) return RatInterval::exact(Rational(-1));
    if (2 * m == n) return RatInterval::exact(Rational(0));
    if (3 * m == n) return RatInterval::exact(Rational(1, 2));
    if (3 * m == 2 * n) return RatInterval::exact(Rational(-1, 2));

    std::lock_guard<std::mutex> lock(detail::seed_mutex());
    auto& cache = detail::seed_cache();
    auto key = std::make_pair(m, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::make_bracket(m, n)).first;
    detail::SeedBracket& b = it->second;
    if (b.exact) return RatInterval::exact(b.lo);
    Rational target(1, Integer(1) << bits);
    while (b.hi - b.lo > target) {
        Rational mid = (b.lo + b.hi) / 2;
        Rational v = detail::eval_int_poly(b.u, mid);
        if (v == 0) {
            b.lo = b.hi = mid;
            b.exact = true;
            break;
        }
        if (v.sign() == b.sign_lo)
            b.lo = mid;
        else
            b.hi = mid;
    }
    return RatInterval(b.lo, b.hi);
}

// cos / sin of 2*pi*a/b.
inline RatInterval cos_circle(std::int64_t a, std::int64_t b, unsigned bits) {
    return cos_pi_frac(2 * a, b, bits);
}
inline RatInterval sin_circle(std::int64_t a, std::int64_t b, unsigned bits) {
    // sin(2*pi*a/b) = cos(pi*(b - 4a)/(2b))
    return cos_pi_frac(b - 4 * a, 2 * b, bits);
}

// Enclosure of p(e^{2 pi i a / b}) with seed precision `bits`.
inline ComplexInterval eval_circle_bits(const LaurentPoly& p, std::int64_t a, std::int64_t b, unsigned bits) {
    if (b <= 0) fail(ErrorKind::Internal, "eval_circle needs positive denominator");
    ComplexInterval out;
    for (const auto& [k, c] : p.terms()) {
        std::int64_t j = mod_i64(k * a, b);
        out.re += c * cos_circle(j, b, bits);
        out.im += c * sin_circle(j, b, bits);
    }
    return out;
}

// Spec-facing precision knob: each increment doubles the seed working
// precision.  precision = 1 corresponds to 64-bit seeds.
inline unsigned precision_to_bits(unsigned precision) {
    if (precision == 0) precision = 1;
    unsigned bits = 32;
    for (unsigned i = 0; i < precision && bits < precision_cap_bits(); ++i) bits *= 2;
    return bits > precision_cap_bits() ? precision_cap_bits() : bits;
}

inline ComplexInterval eval_circle(const LaurentPoly& p, std::int64_t a, std::int64_t b, unsigned precision) {
    if (!(a >= 0 && a < b)) fail(ErrorKind::Internal, "eval_circle expects 0 <= a < b");
    return eval_circle_bits(p, a, b, precision_to_bits(precision));
}

// Certified sign of p(omega) for symmetric p (whose circle values are real).
// The caller must know the value is nonzero (exactness is decided at the
// cyclotomic layer); throws PrecisionExhausted at the configured cap.
inline int certified_sign_on_circle(const LaurentPoly& p, std::int64_t a, std::int64_t b) {
    for (unsigned bits = default_seed_bits();; bits *= 2) {
        ComplexInterval v = eval_circle_bits(p, a, b, bits);
        if (!v.im.contains_zero()) fail(ErrorKind::Internal, "symmetric polynomial with nonreal circle value");
        if (auto s = v.re.sign()) return *s;
        if (bits >= precision_cap_bits())
            fail(ErrorKind::PrecisionExhausted, "sign not certified within the precision cap");
    }
}

}  // namespace concordia
