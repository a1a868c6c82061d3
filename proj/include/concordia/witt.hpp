#pragma once

// Hermitian forms over Q(t) with the involution t -> t^(-1): the
// hermitianization V_t = (1-t)V + (1-t^(-1))V^t, congruence,
// symmetric-pivot diagonalization, and the sound reduction layer used by the
// Witt-class certificates.
//
// Reduction is deliberately incomplete: a class is certified TRIVIAL only by
// an exact certificate (the reduced diagonal empties, or a metabolizer
// verifies), NONTRIVIAL only by a nonzero certified signature witness, and
// UNDECIDED otherwise.  All rewrites are norm rescalings <f> -> <g gbar f>
// recorded in the provenance log.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/laurent.hpp"
#include "concordia/matrix.hpp"
#include "concordia/ratfunc.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

using RfMatrix = Matrix<RatFunc>;

inline RfMatrix conj_transpose(const RfMatrix& m) {
    RfMatrix r(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).involute();
    return r;
}

inline RatFunc det_ratfunc(const RfMatrix& m) {
    return det_field(m, [](const RatFunc& f) { return f.is_zero(); }, RatFunc::one());
}

class HermitianForm {
  public:
    HermitianForm() = default;
    explicit HermitianForm(RfMatrix m) : m_(std::move(m)) {
        if (!m_.is_square()) fail(ErrorKind::DimensionMismatch, "hermitian form must be square");
        for (size_t i = 0; i < m_.rows(); ++i)
            for (size_t j = 0; j <= i; ++j)
                if (m_(j, i) != m_(i, j).involute())
                    fail(ErrorKind::Internal, "matrix is not hermitian under the involution");
    }

    static HermitianForm diagonal(const std::vector<RatFunc>& entries) {
        RfMatrix m(entries.size(), entries.size(), RatFunc::zero());
        for (size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] != entries[i].involute())
                fail(ErrorKind::Internal, "diagonal entry not fixed by the involution");
            m(i, i) = entries[i];
        }
        return HermitianForm(std::move(m));
    }

    size_t size() const { return m_.rows(); }
    const RfMatrix& matrix() const { return m_; }
    const RatFunc& entry(size_t i, size_t j) const { return m_(i, j); }

    friend bool operator==(const HermitianForm& a, const HermitianForm& b) { return a.m_ == b.m_; }

    static HermitianForm direct_sum(const HermitianForm& a, const HermitianForm& b) {
        return HermitianForm(RfMatrix::block_diag(a.m_, b.m_));
    }
    HermitianForm negated() const { return HermitianForm(-m_); }

  private:
    RfMatrix m_;
};

// V_t = (1-t) V + (1-tbar) V^t.
inline HermitianForm hermitianize(const SeifertMatrix& s) {
    RatFunc omt = RatFunc(LaurentPoly{{0, Rational(1)}, {1, Rational(-1)}});       // 1 - t
    RatFunc omti = RatFunc(LaurentPoly{{0, Rational(1)}, {-1, Rational(-1)}});     // 1 - t^(-1)
    const IntMatrix& v = s.matrix();
    size_t n = v.rows();
    RfMatrix m(n, n, RatFunc::zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m(i, j) = RatFunc(Rational(v(i, j))) * omt + RatFunc(Rational(v(j, i))) * omti;
    return HermitianForm(std::move(m));
}

// conj-transpose(P) * M * P; P must be nonsingular.
inline HermitianForm congruence(const HermitianForm& m, const RfMatrix& p) {
    if (!p.is_square() || p.rows() != m.size()) fail(ErrorKind::DimensionMismatch, "base change dimension");
    if (det_ratfunc(p).is_zero()) fail(ErrorKind::SingularBaseChange, "singular base change");
    return HermitianForm(conj_transpose(p) * m.matrix() * p);
}

// ---------------------------------------------------------------------------
// Provenance records.

struct WittStep {
    std::string kind;  // pivot | swap | norm-rescale | cancel
    std::string data;
};

struct Diagonalization {
    std::vector<RatFunc> diag;
    RfMatrix base_change;  // P with conj-transpose(P) * M * P diagonal
    std::vector<WittStep> steps;
};

// Symmetric-pivot congruence diagonalization.  Pivot rule: lowest-index
// nonzero diagonal entry; if the remaining diagonal is zero, a symmetric
// row+column addition creates one (multiplier 1, falling back to the
// conjugate entry when the hermitian cross terms cancel).
inline Diagonalization diagonalize(const HermitianForm& form) {
    size_t n = form.size();
    RfMatrix w = form.matrix();
    RfMatrix p = RfMatrix::identity(n, RatFunc::one(), RatFunc::zero());
    Diagonalization out;

    auto apply_add = [&](size_t dst, size_t src, const RatFunc& f) {
        // congruence by E = I + f e_{src,dst}: col_dst += f col_src, then
        // row_dst += fbar row_src
        RatFunc fb = f.involute();
        for (size_t i = 0; i < n; ++i) w(i, dst) += f * w(i, src);
        for (size_t j = 0; j < n; ++j) w(dst, j) += fb * w(src, j);
        for (size_t i = 0; i < n; ++i) p(i, dst) += f * p(i, src);
    };
    auto apply_swap = [&](size_t i, size_t j) {
        w.swap_rows(i, j);
        w.swap_cols(i, j);
        p.swap_cols(i, j);
        out.steps.push_back({"swap", "basis " + std::to_string(i) + " <-> " + std::to_string(j)});
    };

    for (size_t k = 0; k < n; ++k) {
        if (w(k, k).is_zero()) {
            size_t piv = k + 1;
            while (piv < n && w(piv, piv).is_zero()) ++piv;
            if (piv < n) {
                apply_swap(k, piv);
            } else {
                // all remaining diagonal entries vanish
                bool found = false;
                for (size_t i = k; i < n && !found; ++i)
                    for (size_t j = i + 1; j < n && !found; ++j) {
                        if (w(i, j).is_zero()) continue;
                        RatFunc lambda = RatFunc::one();
                        RatFunc cand = w(i, j) + w(j, i);
                        if (cand.is_zero()) {
                            lambda = w(j, i);
                            cand = lambda * w(i, j) + lambda.involute() * w(j, i);
                        }
                        if (cand.is_zero()) continue;
                        apply_add(i, j, lambda);
                        out.steps.push_back({"norm-rescale", "symmetric addition of basis vector " +
                                                                 std::to_string(j) + " to " + std::to_string(i)});
                        if (i != k) apply_swap(k, i);
                        found = true;
                    }
                if (!found) fail(ErrorKind::SingularForm, "form is singular; split off the radical first");
            }
        }
        const RatFunc d = w(k, k);
        out.steps.push_back({"pivot", "index " + std::to_string(k)});
        for (size_t i = k + 1; i < n; ++i) {
            if (w(k, i).is_zero()) continue;
            apply_add(i, k, -(w(k, i) / d));
        }
        out.diag.push_back(w(k, k));
    }
    out.base_change = p;
    return out;
}

// ---------------------------------------------------------------------------
// Canonical Witt entries.
//
// A diagonal entry of a hermitian form is a symmetric rational function; the
// canonical representative multiplies it into a symmetric Laurent polynomial
// by the norm den * involute(den), strips square rational content and
// verified square polynomial factors s * involute(s), and keeps the result
// as (squarefree positive rational) * (primitive integer symmetric Laurent).

struct CanonicalEntry {
    LaurentPoly rep;
    std::vector<WittStep> steps;
};

inline CanonicalEntry canonical_witt_entry(const RatFunc& f) {
    if (f.is_zero()) fail(ErrorKind::Internal, "canonical entry of zero");
    if (!f.is_symmetric()) fail(ErrorKind::Internal, "Witt entries must be symmetric");
    CanonicalEntry out;
    LaurentPoly q = f.num();
    if (f.den() != LaurentPoly::one()) {
        q = f.num() * f.den().involute();
        out.steps.push_back({"norm-rescale", "cleared denominator by den * involute(den)"});
    }
    Rational scalar(1);
    while (true) {
        if (scalar != 1) {
            q = scalar * q;  // fold the carried squarefree scalar back in
            scalar = 1;
        }
        auto [content, prim] = laurent_content_split(q);
        auto [sq, cfree] = split_square_rational(content);
        if (sq != 1) out.steps.push_back({"norm-rescale", "stripped square rational content " + sq.str() + "^2"});
        scalar = cfree;
        q = prim;

        auto [e, P] = laurent_split(q);
        auto parts = poly_squarefree_decomposition(P);
        Poly d{Rational(1)};
        for (const auto& [g, mult] : parts)
            for (int i = 0; i < mult / 2; ++i) d = poly_mul(d, g);
        if (poly_deg(d) < 1) break;
        LaurentPoly s = laurent_join(0, d);
        LaurentPoly norm = s * s.involute();
        LaurentPoly square = s * s;
        LaurentPoly unit;
        try {
            unit = laurent_exact_div(norm, square);
        } catch (const Error&) {
            break;  // factor not involution-stable; no sound strip available
        }
        if (unit.terms().size() != 1) break;
        auto [ue, uc] = std::pair<std::int64_t, Rational>{unit.min_exp(), unit.coeff(unit.min_exp())};
        // q = square * rest and norm = unit * square, so <q> = <unit^{-1} rest>
        LaurentPoly rest = laurent_exact_div(q, square);
        q = (Rational(1) / uc) * rest.shifted(-ue);
        out.steps.push_back({"norm-rescale", "stripped square factor (" + s.to_string() + ")^2"});
    }
    out.rep = scalar * q;
    if (!out.rep.is_symmetric()) fail(ErrorKind::Internal, "canonical Witt entry lost symmetry");
    return out;
}

// ---------------------------------------------------------------------------
// Reduction by exact cancellation of {d, -d} pairs.

struct WittRepresentative {
    std::vector<RatFunc> diag;  // canonicalized, nonzero, no pair {d, -d}
    std::vector<WittStep> provenance;
};

inline WittRepresentative witt_reduce(const std::vector<RatFunc>& diag) {
    WittRepresentative out;
    std::vector<LaurentPoly> reps;
    for (const auto& d : diag) {
        if (d.is_zero()) fail(ErrorKind::Internal, "witt_reduce requires nonzero entries");
        CanonicalEntry c = canonical_witt_entry(d);
        for (auto& s : c.steps) out.provenance.push_back(std::move(s));
        reps.push_back(std::move(c.rep));
    }
    std::vector<bool> dead(reps.size(), false);
    for (size_t i = 0; i < reps.size(); ++i) {
        if (dead[i]) continue;
        for (size_t j = i + 1; j < reps.size(); ++j) {
            if (dead[j]) continue;
            if (reps[j] == -reps[i]) {
                dead[i] = dead[j] = true;
                out.provenance.push_back(
                    {"cancel", "entries " + std::to_string(i) + " and " + std::to_string(j) + ": <f> + <-f>"});
                break;
            }
        }
    }
    for (size_t i = 0; i < reps.size(); ++i)
        if (!dead[i]) out.diag.emplace_back(reps[i]);
    return out;
}

// Convenience: full pipeline M -> diagonalize -> reduce.
inline WittRepresentative witt_reduce_form(const HermitianForm& m) {
    Diagonalization d = diagonalize(m);
    WittRepresentative r = witt_reduce(d.diag);
    r.provenance.insert(r.provenance.begin(), d.steps.begin(), d.steps.end());
    return r;
}

// ---------------------------------------------------------------------------
// Metabolizer verification: basis spans a half-dimensional subspace on which
// the pairing (including self-pairings) vanishes identically.

inline bool verify_metabolizer(const HermitianForm& m, const std::vector<std::vector<RatFunc>>& basis) {
    size_t n = m.size();
    if (n % 2 != 0) fail(ErrorKind::DimensionMismatch, "metabolizers need even dimension");
    if (basis.size() != n / 2) fail(ErrorKind::DimensionMismatch, "metabolizer basis must have n/2 vectors");
    for (const auto& v : basis)
        if (v.size() != n) fail(ErrorKind::DimensionMismatch, "basis vector of wrong dimension");
    if (det_ratfunc(m.matrix()).is_zero()) fail(ErrorKind::SingularForm, "metabolizer of a singular form");

    // linear independence over Q(t)
    RfMatrix b(n / 2, n, RatFunc::zero());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < n; ++j) b(i, j) = basis[i][j];
    size_t rank = 0;
    {
        RfMatrix r = b;
        size_t row = 0;
        for (size_t col = 0; col < n && row < r.rows(); ++col) {
            size_t piv = row;
            while (piv < r.rows() && r(piv, col).is_zero()) ++piv;
            if (piv == r.rows()) continue;
            r.swap_rows(row, piv);
            for (size_t i = row + 1; i < r.rows(); ++i) {
                if (r(i, col).is_zero()) continue;
                RatFunc f = r(i, col) / r(row, col);
                for (size_t j = col; j < n; ++j) r(i, j) -= f * r(row, j);
            }
            ++row;
        }
        rank = row;
    }
    if (rank != n / 2) return false;

    for (size_t u = 0; u < basis.size(); ++u)
        for (size_t w = u; w < basis.size(); ++w) {
            RatFunc pairing = RatFunc::zero();
            for (size_t i = 0; i < n; ++i) {
                if (basis[u][i].is_zero()) continue;
                RatFunc ci = basis[u][i].involute();
                for (size_t j = 0; j < n; ++j) pairing += ci * m.entry(i, j) * basis[w][j];
            }
            if (!pairing.is_zero()) return false;
        }
    return true;
}

}  // namespace concordia
