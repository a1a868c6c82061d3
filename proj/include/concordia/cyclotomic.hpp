#pragma once

// Exact arithmetic in Q(omega) for omega = e^{2 pi i a/b}: polynomials modulo
// the cyclotomic polynomial of the reduced order.  Complex conjugation is the
// field automorphism omega -> omega^(-1).  Signs of real elements are decided
// by exact zero tests plus certified interval refinement of the embedding.
//
// Elements carry an integer coefficient vector over a single denominator, so
// ring operations run on integers with one content-gcd pass per result
// instead of per-coefficient rational normalization.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/interval.hpp"
#include "concordia/laurent.hpp"
#include "concordia/numbers.hpp"

namespace concordia {

// Coefficients of the n-th cyclotomic polynomial (monic, integer).
inline const std::vector<Integer>& cyclotomic_polynomial(std::int64_t n) {
    static std::map<std::int64_t, std::vector<Integer>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed over Q.
    Poly acc(static_cast<size_t>(n + 1), Rational(0));
    acc[0] = -1;
    acc[static_cast<size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Integer> phi_d;
        {
            // recurse without double-locking
            auto jt = cache.find(d);
            if (jt != cache.end()) {
                phi_d = jt->second;
            } else {
                mutex.unlock();
                phi_d = cyclotomic_polynomial(d);
                mutex.lock();
            }
        }
        Poly pd(phi_d.size());
        for (size_t i = 0; i < phi_d.size(); ++i) pd[i] = Rational(phi_d[i]);
        auto [q, r] = poly_divrem(acc, pd);
        if (!r.empty()) fail(ErrorKind::Internal, "cyclotomic recursion left a remainder");
        acc = std::move(q);
    }
    std::vector<Integer> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (den(acc[i]) != 1) fail(ErrorKind::Internal, "cyclotomic polynomial not integral");
        out[i] = num(acc[i]);
    }
    return cache.emplace(n, std::move(out)).first->second;
}

class CycloCtx {
  public:
    struct Elt {
        std::vector<Integer> num;  // coefficients on 1, w, ..., w^(deg-1)
        Integer den = 1;           // positive

        friend bool operator==(const Elt& a, const Elt& b) { return a.num == b.num && a.den == b.den; }
    };

    CycloCtx(std::int64_t a, std::int64_t b) {
        if (b <= 0) fail(ErrorKind::Internal, "circle point needs positive denominator");
        a = mod_i64(a, b);
        std::int64_t g = a == 0 ? b : gcd_i64(a, b);
        a_ = a / g;
        b_ = b / g;
        const auto& phi = cyclotomic_polynomial(b_);
        deg_ = phi.size() - 1;
        phi_ = phi;
        // integer reduction rows for w^k, k = deg .. max(2 deg - 2, b - 1);
        // integral because Phi is monic
        std::int64_t maxpow = std::max<std::int64_t>(2 * static_cast<std::int64_t>(deg_) - 2, b_ - 1);
        std::vector<Integer> cur(deg_, Integer(0));
        for (size_t i = 0; i < deg_; ++i) cur[i] = -phi_[i];
        for (std::int64_t k = static_cast<std::int64_t>(deg_); k <= maxpow; ++k) {
            red_.push_back(cur);
            std::vector<Integer> next(deg_, Integer(0));
            Integer top = cur[deg_ - 1];
            for (size_t i = deg_ - 1; i > 0; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (top != 0)
                for (size_t i = 0; i < deg_; ++i) next[i] -= top * phi_[i];
            cur = std::move(next);
        }
    }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    size_t deg() const { return deg_; }

    Elt zero() const { return Elt{std::vector<Integer>(deg_, Integer(0)), Integer(1)}; }
    Elt one() const {
        Elt e = zero();
        e.num[0] = 1;
        return e;
    }
    Elt from_rational(const Rational& c) const {
        Elt e = zero();
        e.num[0] = concordia::num(c);
        e.den = concordia::den(c);
        return e;
    }
    // omega^k for any integer k.
    Elt power(std::int64_t k) const {
        std::vector<Integer> acc(deg_, Integer(0));
        add_power(acc, Integer(1), k);
        return Elt{std::move(acc), Integer(1)};
    }
    Elt from_laurent(const LaurentPoly& p) const {
        Integer l = 1;
        for (const auto& [e, c] : p.terms()) l = lcm_int(l, concordia::den(c));
        std::vector<Integer> acc(deg_, Integer(0));
        for (const auto& [e, c] : p.terms()) add_power(acc, concordia::num(c) * (l / concordia::den(c)), e);
        Elt out{std::move(acc), l};
        normalize(out);
        return out;
    }

    bool is_zero(const Elt& x) const {
        for (const auto& c : x.num)
            if (c != 0) return false;
        return true;
    }

    Elt add(const Elt& x, const Elt& y) const {
        Elt out = zero();
        if (x.den == y.den) {
            out.den = x.den;
            for (size_t i = 0; i < deg_; ++i) out.num[i] = x.num[i] + y.num[i];
        } else {
            Integer g = gcd_int(x.den, y.den);
            Integer xs = y.den / g, ys = x.den / g;
            out.den = x.den * xs;
            for (size_t i = 0; i < deg_; ++i) out.num[i] = x.num[i] * xs + y.num[i] * ys;
        }
        normalize(out);
        return out;
    }
    Elt sub(const Elt& x, const Elt& y) const { return add(x, neg(y)); }
    Elt neg(Elt x) const {
        for (auto& c : x.num) c = -c;
        return x;
    }
    Elt mul(const Elt& x, const Elt& y) const {
        std::vector<Integer> conv(2 * deg_ - 1, Integer(0));
        for (size_t i = 0; i < deg_; ++i) {
            if (x.num[i] == 0) continue;
            for (size_t j = 0; j < deg_; ++j) {
                if (y.num[j] == 0) continue;
                conv[i + j] += x.num[i] * y.num[j];
            }
        }
        Elt out;
        out.num.assign(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(deg_));
        for (size_t k = deg_; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            const auto& row = red_[k - deg_];
            for (size_t i = 0; i < deg_; ++i) out.num[i] += conv[k] * row[i];
        }
        out.den = x.den * y.den;
        normalize(out);
        return out;
    }

    // omega -> omega^(-1)
    Elt conj(const Elt& x) const {
        std::vector<Integer> acc(deg_, Integer(0));
        for (size_t k = 0; k < deg_; ++k) {
            if (x.num[k] == 0) continue;
            add_power(acc, x.num[k], -static_cast<std::int64_t>(k));
        }
        Elt out{std::move(acc), x.den};
        normalize(out);
        return out;
    }
    bool is_real(const Elt& x) const { return x == conj(x); }

    Elt inv(const Elt& x) const {
        if (is_zero(x)) fail(ErrorKind::Internal, "inverse of zero cyclotomic element");
        // extended Euclid in Q[w] against Phi
        Poly r0(phi_.size());
        for (size_t i = 0; i < phi_.size(); ++i) r0[i] = Rational(phi_[i]);
        Poly r1(deg_);
        for (size_t i = 0; i < deg_; ++i) r1[i] = make_rational(x.num[i], x.den);
        poly_trim(r1);
        Poly s0{}, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r2] = poly_divrem(r0, r1);
            Poly s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (poly_deg(r0) != 0) fail(ErrorKind::Internal, "cyclotomic gcd not a unit");
        Rational scale = Rational(1) / r0[0];
        Integer l = 1;
        for (const auto& c : s0) l = lcm_int(l, concordia::den(c * scale));
        Elt out = zero();
        for (size_t i = 0; i < s0.size(); ++i) {
            if (i >= deg_) fail(ErrorKind::Internal, "Bezout coefficient too large");
            Rational v = s0[i] * scale;
            out.num[i] = concordia::num(v) * (l / concordia::den(v));
        }
        out.den = l;
        normalize(out);
        return out;
    }
    Elt div(const Elt& x, const Elt& y) const { return mul(x, inv(y)); }

    // Enclosure of the real/imaginary part of the embedded value.
    RatInterval real_enclosure(const Elt& x, unsigned bits) const {
        RatInterval acc;
        for (size_t k = 0; k < deg_; ++k) {
            if (x.num[k] == 0) continue;
            acc += make_rational(x.num[k], x.den) *
                   cos_circle(mod_i64(static_cast<std::int64_t>(k) * a_, b_), b_, bits);
        }
        return acc;
    }
    RatInterval imag_enclosure(const Elt& x, unsigned bits) const {
        RatInterval acc;
        for (size_t k = 0; k < deg_; ++k) {
            if (x.num[k] == 0) continue;
            acc += make_rational(x.num[k], x.den) *
                   sin_circle(mod_i64(static_cast<std::int64_t>(k) * a_, b_), b_, bits);
        }
        return acc;
    }

    // Sign of a real element; exact zero gives 0, otherwise interval
    // refinement terminates because the value is exactly nonzero.
    int certified_sign(const Elt& x) const {
        if (is_zero(x)) return 0;
        if (!is_real(x)) fail(ErrorKind::Internal, "sign of a nonreal cyclotomic element");
        for (unsigned bits = default_seed_bits();; bits *= 2) {
            if (auto s = real_enclosure(x, bits).sign()) return *s;
            if (bits >= precision_cap_bits())
                fail(ErrorKind::PrecisionExhausted, "sign not certified within the precision cap");
        }
    }

  private:
    void add_power(std::vector<Integer>& acc, const Integer& c, std::int64_t k) const {
        std::int64_t e = mod_i64(k, b_);
        if (e < static_cast<std::int64_t>(deg_)) {
            acc[static_cast<size_t>(e)] += c;
        } else {
            const auto& row = red_[static_cast<size_t>(e) - deg_];
            for (size_t i = 0; i < deg_; ++i) acc[i] += c * row[i];
        }
    }

    void normalize(Elt& x) const {
        if (x.den < 0) {
            x.den = -x.den;
            for (auto& c : x.num) c = -c;
        }
        Integer g = x.den;
        for (const auto& c : x.num) {
            g = gcd_int(g, abs_int(c));
            if (g == 1) return;
        }
        if (g == 1 || g == 0) return;
        x.den /= g;
        for (auto& c : x.num) c /= g;
    }

    std::int64_t a_, b_;
    size_t deg_;
    std::vector<Integer> phi_;
    std::vector<std::vector<Integer>> red_;
};

// Shared immutable contexts; construction (reduction tables) is the
// expensive part, so samples reuse one instance per reduced fraction.
inline const CycloCtx& cyclo_ctx(std::int64_t a, std::int64_t b) {
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<CycloCtx>> cache;
    static std::mutex mutex;
    if (b <= 0) fail(ErrorKind::Internal, "circle point needs positive denominator");
    a = mod_i64(a, b);
    std::int64_t g = a == 0 ? b : gcd_i64(a, b);
    auto key = std::make_pair(a / g, b / g);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<CycloCtx>(a, b)).first;
    return *it->second;
}

}  // namespace concordia
