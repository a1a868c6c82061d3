#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "concordia/error.hpp"

namespace concordia {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Integer& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_int(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm_int(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

// Largest s with s*s <= x (x >= 0).
inline Integer isqrt(const Integer& x) {
    if (x < 0) fail(ErrorKind::Internal, "isqrt of negative");
    return boost::multiprecision::sqrt(x);
}

// Exact square root of a nonnegative rational, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer n = num(r), d = den(r);
    Integer sn = isqrt(n), sd = isqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

// Splits a positive rational as s^2 * f with f squarefree (numerator and
// denominator squarefree separately); returns {s, f}.
inline std::pair<Rational, Rational> split_square_rational(const Rational& r) {
    if (r <= 0) fail(ErrorKind::Internal, "split_square_rational expects positive input");
    auto split_int = [](Integer n) {
        Integer s = 1, f = 1;
        for (Integer p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                int e = 0;
                while (n % p == 0) { n /= p; ++e; }
                for (int i = 0; i < e / 2; ++i) s *= p;
                if (e % 2) f *= p;
            }
        }
        f *= n;
        return std::pair<Integer, Integer>(s, f);
    };
    auto [sn, fn] = split_int(num(r));
    auto [sd, fd] = split_int(den(r));
    return {Rational(sn, sd), Rational(fn, fd)};
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Returns the prime base when n is a prime power p^k (k >= 1), else nullopt.
inline std::optional<std::int64_t> prime_power_base(std::int64_t n) {
    if (n < 2) return std::nullopt;
    std::int64_t p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (p * p > n) return n;  // n itself prime
    while (n % p == 0) n /= p;
    if (n == 1) return p;
    return std::nullopt;
}

// n/d with the sign moved into the numerator (the two-argument Rational
// constructor rejects negative denominators).
inline Rational make_rational(Integer n, Integer d) {
    if (d == 0) fail(ErrorKind::Internal, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

// x mod p in [0, p) for a big integer and small modulus.
inline std::int64_t int_mod(const Integer& x, std::int64_t p) {
    Integer r = x % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { std::int64_t t = a % b; a = b; b = t; }
    return a;
}

inline std::int64_t mod_i64(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Modular inverse for small moduli; m prime in all callers.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    a = mod_i64(a, m);
    std::int64_t t = 0, newt = 1, r = m, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::swap(t, newt); newt -= q * t;
        std::swap(r, newr); newr -= q * r;
    }
    if (r != 1) fail(ErrorKind::NotInvertibleModP, "element not invertible");
    return mod_i64(t, m);
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1;
    b = mod_i64(b, m);
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

}  // namespace concordia
