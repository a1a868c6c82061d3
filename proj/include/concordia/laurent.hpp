#pragma once

// Exact arithmetic for Laurent polynomials in t over Q, together with the
// Conway-variable bookkeeping.  The single sign convention used everywhere:
//
//     z = t^(-1/2) - t^(1/2),   so   z^2 = t - 2 + t^(-1)   and
//     -z^2 = (1-t)(1-t^(-1)).
//
// All modules refer to z^2 through z_squared() below; nothing else hardcodes
// the sign.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/numbers.hpp"

namespace concordia {

class LaurentPoly {
  public:
    using Terms = std::map<std::int64_t, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    LaurentPoly(std::initializer_list<std::pair<std::int64_t, Rational>> init) {
        for (const auto& [e, c] : init) add_term(e, c);
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    // c * t^e
    static LaurentPoly term(const Rational& c, std::int64_t e) {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    const Terms& terms() const { return terms_; }

    std::int64_t min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    std::int64_t max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    Rational coeff(std::int64_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(std::int64_t e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }

    // Multiplication by the unit t^k.
    LaurentPoly shifted(std::int64_t k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    // t -> t^(-1)
    LaurentPoly involute() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }
    bool is_symmetric() const { return *this == involute(); }

    LaurentPoly pow(std::int64_t k) const {
        if (k < 0) fail(ErrorKind::Internal, "negative power of a Laurent polynomial");
        LaurentPoly r = one(), base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    Rational eval(const Rational& x) const {
        if (x == 0) fail(ErrorKind::Internal, "Laurent polynomial evaluated at 0");
        // Horner on the shifted polynomial, then divide by x^(-min_exp).
        Rational acc(0);
        std::int64_t prev = 0;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first)
                for (std::int64_t i = 0; i < prev - it->first; ++i) acc *= x;
            acc += it->second;
            prev = it->first;
            first = false;
        }
        if (terms_.empty()) return Rational(0);
        std::int64_t m = min_exp();
        Rational scale(1);
        std::int64_t k = m < 0 ? -m : m;
        for (std::int64_t i = 0; i < k; ++i) scale *= x;
        Rational out = m < 0 ? Rational(acc / scale) : Rational(acc * scale);
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    // Canonical text form: terms sorted by decreasing exponent, joined by
    // " + ", each rendered "coeff*t^exp", e.g. "-2*t^1 + 5*t^0 + -2*t^-1".
    std::string to_string() const {
        if (terms_.empty()) return "0*t^0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            os << it->second << "*t^" << it->first;
            first = false;
        }
        return os.str();
    }

    static LaurentPoly parse(const std::string& text);

  private:
    Terms terms_;  // exponent -> coefficient, no zero values stored
};

// z^2 as a Laurent polynomial: t - 2 + t^(-1).
inline const LaurentPoly& z_squared() {
    static const LaurentPoly z2{{1, Rational(1)}, {0, Rational(-2)}, {-1, Rational(1)}};
    return z2;
}

// (1-t)(1-t^(-1)) = -z^2.
inline const LaurentPoly& one_minus_t_norm() {
    static const LaurentPoly n = -z_squared();
    return n;
}

inline LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    if (text == "0") return result;
    size_t pos = 0;
    auto parse_int = [&](const char* what) -> Integer {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) { ++pos; ++digits; }
        if (digits == 0) fail(ErrorKind::Parse, std::string("expected ") + what + " at offset " + std::to_string(start));
        return Integer(text.substr(start, pos - start));
    };
    while (true) {
        Integer n = parse_int("coefficient");
        Integer d = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            d = parse_int("coefficient denominator");
            if (d == 0) fail(ErrorKind::Parse, "zero denominator in coefficient");
        }
        if (text.compare(pos, 3, "*t^") != 0)
            fail(ErrorKind::Parse, "expected \"*t^\" at offset " + std::to_string(pos));
        pos += 3;
        Integer e = parse_int("exponent");
        result.add_term(static_cast<std::int64_t>(e), make_rational(n, d));
        if (pos == text.size()) break;
        if (text.compare(pos, 3, " + ") != 0)
            fail(ErrorKind::Parse, "expected \" + \" separator at offset " + std::to_string(pos));
        pos += 3;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers (coefficients in Q, index = degree).  Used for
// gcd / exact division / squarefree machinery behind RatFunc and the Witt
// layer.  A Laurent polynomial p factors uniquely as t^e * P with P(0) != 0.

using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline std::int64_t poly_deg(const Poly& p) { return static_cast<std::int64_t>(p.size()) - 1; }
inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// Division with remainder over Q.
inline std::pair<Poly, Poly> poly_divrem(Poly a, const Poly& b) {
    if (b.empty()) fail(ErrorKind::Internal, "polynomial division by zero");
    Poly q;
    poly_trim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);  // the top coefficient cancels exactly over Q
    }
    poly_trim(q);
    return {q, a};
}

inline Poly poly_derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(Rational(static_cast<std::int64_t>(i)) * p[i]);
    poly_trim(r);
    return r;
}

inline Poly poly_monic(Poly p) {
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// Yun's squarefree decomposition: P = prod g_i^i with the g_i squarefree and
// pairwise coprime; returns the list of (g_i, i) with deg g_i > 0.
inline std::vector<std::pair<Poly, int>> poly_squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (poly_deg(f) < 1) return out;
    Poly fp = poly_derivative(f);
    Poly a = poly_gcd(f, fp);
    Poly b = poly_divrem(f, a).first;
    Poly c = poly_divrem(fp, a).first;
    Poly d = poly_sub(c, poly_derivative(b));
    int i = 1;
    while (poly_deg(b) > 0) {
        Poly ai = poly_gcd(b, d);
        if (poly_deg(ai) > 0) out.emplace_back(ai, i);
        b = poly_divrem(b, ai).first;
        c = poly_divrem(d, ai).first;
        d = poly_sub(c, poly_derivative(b));
        ++i;
    }
    return out;
}

// Laurent <-> dense conversions.
inline std::pair<std::int64_t, Poly> laurent_split(const LaurentPoly& p) {
    if (p.is_zero()) return {0, Poly{}};
    std::int64_t e = p.min_exp();
    Poly dense(static_cast<size_t>(p.max_exp() - e + 1), Rational(0));
    for (const auto& [k, c] : p.terms()) dense[static_cast<size_t>(k - e)] = c;
    return {e, dense};
}

inline LaurentPoly laurent_join(std::int64_t e, const Poly& dense) {
    LaurentPoly p;
    for (size_t i = 0; i < dense.size(); ++i) p.add_term(e + static_cast<std::int64_t>(i), dense[i]);
    return p;
}

// Exact division of Laurent polynomials; throws if the division leaves a
// remainder.
inline LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail(ErrorKind::Internal, "Laurent division by zero");
    if (a.is_zero()) return LaurentPoly::zero();
    auto [ea, pa] = laurent_split(a);
    auto [eb, pb] = laurent_split(b);
    auto [q, r] = poly_divrem(pa, pb);
    if (!r.empty()) fail(ErrorKind::Internal, "inexact Laurent division");
    return laurent_join(ea - eb, q);
}

// gcd of Laurent polynomials, returned with min exponent 0 and monic.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.is_zero() ? LaurentPoly::zero() : laurent_join(0, poly_monic(laurent_split(b).second));
    if (b.is_zero()) return laurent_join(0, poly_monic(laurent_split(a).second));
    return laurent_join(0, poly_gcd(laurent_split(a).second, laurent_split(b).second));
}

// content (positive rational) and primitive integer part: p = sign-carrying
// primitive * content.
inline std::pair<Rational, LaurentPoly> laurent_content_split(const LaurentPoly& p) {
    if (p.is_zero()) return {Rational(0), p};
    Integer g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        g = gcd_int(g, abs_int(num(c)));
        l = lcm_int(l, den(c));
    }
    Rational content(g, l);
    LaurentPoly prim;
    for (const auto& [e, c] : p.terms()) prim.add_term(e, c / content);
    return {content, prim};
}

// ---------------------------------------------------------------------------
// Conway polynomials: integer polynomials in z.  Knot inputs produce only
// even z-powers with constant term 1; the two-component links arising from
// skein smoothings carry odd powers.

class ConwayPoly {
  public:
    using Terms = std::map<std::int64_t, Integer>;

    ConwayPoly() = default;

    void add_term(std::int64_t e, const Integer& c) {
        if (c == 0) return;
        if (e < 0) fail(ErrorKind::Internal, "negative z-exponent in Conway polynomial");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(std::int64_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    friend ConwayPoly operator-(ConwayPoly a, const ConwayPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    // multiplication by z
    ConwayPoly times_z() const {
        ConwayPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + 1] = c;
        return r;
    }

    friend bool operator==(const ConwayPoly& a, const ConwayPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ConwayPoly& a, const ConwayPoly& b) { return !(a == b); }

    // Substitute z^2 = t - 2 + t^(-1); only valid when every power is even.
    LaurentPoly back_substitute() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            if (e % 2 != 0) fail(ErrorKind::Internal, "odd z-power has no Laurent image");
            r += Rational(c) * z_squared().pow(e / 2);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0*z^0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            os << it->second << "*z^" << it->first;
            first = false;
        }
        return os.str();
    }

  private:
    Terms terms_;
};

// Expresses a symmetric Laurent polynomial as an integer polynomial in z^2.
// Errors: NotSymmetric, NotInImage.
inline ConwayPoly to_conway(const LaurentPoly& p) {
    if (!p.is_symmetric()) fail(ErrorKind::NotSymmetric, "to_conway requires a symmetric polynomial");
    ConwayPoly out;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        std::int64_t m = rest.max_exp();
        if (m < 0) fail(ErrorKind::Internal, "symmetric polynomial with negative top exponent");
        Rational c = rest.coeff(m);
        if (den(c) != 1) fail(ErrorKind::NotInImage, "no integer representation in Z[z^2]");
        out.add_term(2 * m, num(c));
        rest -= c * z_squared().pow(m);
    }
    return out;
}

// Expansion of an arbitrary symmetric Laurent polynomial in powers of z^2
// with *rational* coefficients (always exists); used internally.
inline std::vector<Rational> zsq_expansion(const LaurentPoly& p) {
    if (!p.is_symmetric()) fail(ErrorKind::Internal, "zsq_expansion requires symmetric input");
    std::vector<Rational> coeffs;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        std::int64_t m = rest.max_exp();
        Rational c = rest.coeff(m);
        if (static_cast<std::int64_t>(coeffs.size()) <= m) coeffs.resize(static_cast<size_t>(m + 1), Rational(0));
        coeffs[static_cast<size_t>(m)] = c;
        rest -= c * z_squared().pow(m);
    }
    return coeffs;
}

// Decides whether p = +-t^k * F(t)^2 for a symmetric Laurent polynomial F;
// returns F normalized with F(1) >= 0, or nullopt.
inline std::optional<LaurentPoly> is_square_up_to_units(const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    auto [e, P] = laurent_split(p);
    (void)e;
    std::int64_t D = poly_deg(P);
    if (D % 2 != 0) return std::nullopt;
    std::int64_t d = D / 2;
    if (d % 2 != 0) return std::nullopt;  // span of F^2 is 4*halfwidth(F)
    Poly T = P;
    if (T.back() < 0)
        for (auto& c : T) c = -c;
    auto lead_sqrt = rational_sqrt(T.back());
    if (!lead_sqrt) return std::nullopt;
    Poly G(static_cast<size_t>(d + 1), Rational(0));
    G[static_cast<size_t>(d)] = *lead_sqrt;
    for (std::int64_t i = d - 1; i >= 0; --i) {
        Rational s(0);
        for (std::int64_t j = i + 1; j <= d - 1; ++j) {
            std::int64_t k = i + d - j;
            if (k >= i + 1 && k <= d - 1) s += G[static_cast<size_t>(j)] * G[static_cast<size_t>(k)];
        }
        G[static_cast<size_t>(i)] = (T[static_cast<size_t>(i + d)] - s) / (2 * G[static_cast<size_t>(d)]);
    }
    if (poly_mul(G, G) != T) return std::nullopt;
    for (std::int64_t i = 0; i <= d; ++i)
        if (G[static_cast<size_t>(i)] != G[static_cast<size_t>(d - i)]) return std::nullopt;  // needs palindromic root
    LaurentPoly F = laurent_join(-d / 2, G);
    if (F.eval(1) < 0) F = -F;
    return F;
}

// "equal up to units": q = +- t^k p.
inline bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    std::int64_t shift = q.min_exp() - p.min_exp();
    LaurentPoly s = p.shifted(shift);
    return q == s || q == -s;
}

}  // namespace concordia
