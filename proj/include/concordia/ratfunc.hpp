#pragma once

// Q(t) with the involution t -> t^(-1), represented as quotients of Laurent
// polynomials.  Canonical form: numerator and denominator coprime, the
// denominator a primitive integer polynomial with minimal exponent 0 and
// positive leading coefficient.  Equality is structural.

#include <string>

#include "concordia/error.hpp"
#include "concordia/laurent.hpp"

namespace concordia {

class RatFunc {
  public:
    RatFunc() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    explicit RatFunc(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}  // NOLINT: intentional
    RatFunc(LaurentPoly numerator, LaurentPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) fail(ErrorKind::Internal, "rational function with zero denominator");
        canonicalize();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(LaurentPoly::one()); }
    static RatFunc t(std::int64_t k = 1) { return RatFunc(LaurentPoly::term(Rational(1), k)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentPoly::one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) fail(ErrorKind::Internal, "division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc inverse() const {
        if (is_zero()) fail(ErrorKind::Internal, "inverse of zero");
        return RatFunc(den_, num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    // t -> t^(-1)
    RatFunc involute() const { return RatFunc(num_.involute(), den_.involute()); }
    bool is_symmetric() const { return *this == involute(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        LaurentPoly g = laurent_gcd(num_, den_);
        if (!(g == LaurentPoly::one())) {
            num_ = laurent_exact_div(num_, g);
            den_ = laurent_exact_div(den_, g);
        }
        // shift the denominator to minimal exponent 0
        std::int64_t e = den_.min_exp();
        if (e != 0) {
            den_ = den_.shifted(-e);
            num_ = num_.shifted(-e);
        }
        // make the denominator a primitive integer polynomial
        auto [content, prim] = laurent_content_split(den_);
        den_ = prim;
        num_ = Rational(1) / content * num_;
        if (den_.coeff(den_.max_exp()) < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }

    LaurentPoly num_, den_;
};

inline bool is_zero_value(const RatFunc& f) { return f.is_zero(); }
inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const Integer& x) { return x == 0; }
inline bool is_zero_value(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace concordia
