#pragma once

// Alexander and Conway polynomials from a Seifert matrix.
//
//   Delta(t) = t^(-r/2) det(V - t V^t)        (knots, r even)
//   C(z) with C(z) z^r = det(V_t)             (any rank; links get odd powers)

#include "concordia/error.hpp"
#include "concordia/laurent.hpp"
#include "concordia/matrix.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

// Normalized Alexander polynomial of a knot-valid Seifert matrix.
inline LaurentPoly alexander(const SeifertMatrix& s) {
    if (s.size() % 2 != 0 || s.is_link_case()) fail(ErrorKind::OddRank, "Alexander polynomial needs even rank");
    size_t r = s.size();
    if (r == 0) return LaurentPoly::one();
    Matrix<LaurentPoly> m(r, r);
    const IntMatrix& v = s.matrix();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            m(i, j) = LaurentPoly{{0, Rational(v(i, j))}, {1, -Rational(v(j, i))}};  // v_ij - t v_ji
    LaurentPoly delta = det_laurent(m).shifted(-static_cast<std::int64_t>(r) / 2);
    if (delta.eval(1) != 1) fail(ErrorKind::Internal, "normalized Alexander polynomial must have Delta(1) = 1");
    if (!delta.is_symmetric()) fail(ErrorKind::Internal, "Alexander polynomial must be symmetric");
    return delta;
}

// Conway polynomial C(z) of any Seifert matrix (knot or two-component-link
// rank): expand det(V_t) in powers of z^2 and divide by z^rank.
inline ConwayPoly conway(const SeifertMatrix& s) {
    size_t r = s.size();
    if (r == 0) {
        ConwayPoly c;
        c.add_term(0, Integer(1));
        return c;
    }
    const IntMatrix& v = s.matrix();
    Matrix<LaurentPoly> m(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            // (1-t) v_ij + (1-t^-1) v_ji
            LaurentPoly e;
            e.add_term(0, Rational(v(i, j)) + Rational(v(j, i)));
            e.add_term(1, -Rational(v(i, j)));
            e.add_term(-1, -Rational(v(j, i)));
            m(i, j) = e;
        }
    LaurentPoly dt = det_laurent(m);
    ConwayPoly c;
    if (dt.is_zero()) return c;  // split links have vanishing polynomial
    std::vector<Rational> coeffs = zsq_expansion(dt);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (den(coeffs[k]) != 1) fail(ErrorKind::Internal, "Conway expansion not integral");
        std::int64_t zexp = 2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(r);
        if (zexp < 0) fail(ErrorKind::Internal, "det(V_t) not divisible by z^rank");
        c.add_term(zexp, num(coeffs[k]));
    }
    if (r % 2 == 0 && !s.is_link_case()) {
        if (c.coeff(0) != 1) fail(ErrorKind::Internal, "knot Conway polynomial must have constant term 1");
    }
    return c;
}

}  // namespace concordia
