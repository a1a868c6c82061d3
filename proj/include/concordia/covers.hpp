#pragma once

// Homology of cyclic branched covers from a Seifert matrix.
//
// Presentation: Gamma^q - (Gamma - I)^q with Gamma = (V - V^t)^(-1) V, which
// is integral because det(V - V^t) = +-1.  The order is cross-checked, always
// on, against the independent oracle |prod_{j=1}^{q-1} Delta(zeta_q^j)|
// computed as an exact integer resultant; a mismatch is a hard internal
// error.  The deck transformation acts as V^(-1) V^t mod p.

#include <cstdint>
#include <optional>
#include <vector>

#include "concordia/alexander.hpp"
#include "concordia/error.hpp"
#include "concordia/matrix.hpp"
#include "concordia/numbers.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

// ---------------------------------------------------------------------------
// Small linear algebra over Z_p (p a small prime; entries stored reduced).

using ZpMatrix = Matrix<std::int64_t>;
using ZpVector = std::vector<std::int64_t>;

inline ZpMatrix zp_reduce(const IntMatrix& m, std::int64_t p) {
    ZpMatrix r(m.rows(), m.cols(), 0);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = int_mod(m(i, j), p);
    return r;
}

inline ZpMatrix zp_mul(const ZpMatrix& a, const ZpMatrix& b, std::int64_t p) {
    ZpMatrix r(a.rows(), b.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) r(i, j) = (r(i, j) + a(i, k) * b(k, j)) % p;
        }
    return r;
}

// Row-reduce in place; returns pivot columns.
inline std::vector<size_t> zp_rref(ZpMatrix& m, std::int64_t p) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && m(piv, col) % p == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        std::int64_t inv = inv_mod(m(row, col), p);
        for (size_t j = 0; j < m.cols(); ++j) m(row, j) = mod_i64(m(row, j) * inv, p);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            std::int64_t f = m(i, col);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_i64(m(i, j) - f * m(row, j), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline ZpMatrix zp_inverse(const ZpMatrix& m, std::int64_t p) {
    size_t n = m.rows();
    ZpMatrix aug(n, 2 * n, 0);
    aug.set_block(0, 0, m);
    for (size_t i = 0; i < n; ++i) aug(i, n + i) = 1;
    auto pivots = zp_rref(aug, p);
    if (pivots.size() != n || pivots.back() != n - 1)
        fail(ErrorKind::NotInvertibleModP, "matrix not invertible mod p");
    return aug.block(0, n, n, n);
}

// Basis of the kernel of m over Z_p (rows of the result).
inline std::vector<ZpVector> zp_kernel(ZpMatrix m, std::int64_t p) {
    size_t n = m.cols();
    auto pivots = zp_rref(m, p);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<ZpVector> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ZpVector v(n, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod_i64(-m(r, free), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Cover homology.

struct CoverHomology {
    std::int64_t q = 2;
    IntMatrix presentation;
    std::vector<Integer> snf;  // nonnegative, divisibility chain
    bool finite = true;
    Integer order = 1;  // meaningful when finite
};

namespace detail {

// |Res((t^q - 1)/(t - 1), D)| for an integer polynomial D (ascending
// coefficients), via the Sylvester determinant.
inline Integer resultant_with_qth_roots(const std::vector<Integer>& d_coeffs, std::int64_t q) {
    std::vector<Integer> psi(static_cast<size_t>(q), Integer(1));  // 1 + t + ... + t^{q-1}
    std::vector<Integer> d = d_coeffs;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) return 0;
    size_t m = psi.size() - 1, n = d.size() - 1;
    if (n == 0) {
        Integer r = 1;
        for (size_t i = 0; i < m; ++i) r *= d[0];
        return abs_int(r);
    }
    IntMatrix syl(m + n, m + n, Integer(0));
    for (size_t i = 0; i < n; ++i)  // rows of psi coefficients
        for (size_t k = 0; k <= m; ++k) syl(i, i + k) = psi[m - k];
    for (size_t i = 0; i < m; ++i)  // rows of d coefficients
        for (size_t k = 0; k <= n; ++k) syl(n + i, i + k) = d[n - k];
    return abs_int(det_integer(syl));
}

// det(V - t V^t) as an integer polynomial split t^e * P, returning P.
inline std::vector<Integer> alexander_numerator(const SeifertMatrix& s) {
    size_t r = s.size();
    if (r == 0) return {Integer(1)};
    Matrix<LaurentPoly> m(r, r);
    const IntMatrix& v = s.matrix();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            m(i, j) = LaurentPoly{{0, Rational(v(i, j))}, {1, -Rational(v(j, i))}};
    LaurentPoly d = det_laurent(m);
    if (d.is_zero()) fail(ErrorKind::Internal, "det(V - tV^t) cannot vanish for a valid knot");
    auto [e, poly] = laurent_split(d);
    (void)e;
    std::vector<Integer> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (den(poly[i]) != 1) fail(ErrorKind::Internal, "Alexander numerator not integral");
        out[i] = num(poly[i]);
    }
    return out;
}

}  // namespace detail

inline CoverHomology cover_homology(const SeifertMatrix& s, std::int64_t q) {
    if (q < 2) fail(ErrorKind::PreconditionFailed, "cover degree must be >= 2");
    if (s.is_link_case() || s.size() % 2 != 0) fail(ErrorKind::OddRank, "cover homology needs knot-valid matrices");
    CoverHomology out;
    out.q = q;
    size_t r = s.size();
    if (r == 0) {
        out.presentation = IntMatrix(0, 0);
        out.finite = true;
        out.order = 1;
        return out;
    }
    const IntMatrix& v = s.matrix();
    IntMatrix gamma = inverse_unimodular(v - v.transpose()) * v;
    IntMatrix gm1 = gamma - IntMatrix::identity(r, Integer(1));
    out.presentation = integer_pow(gamma, q) - integer_pow(gm1, q);
    out.snf = smith_normal_form(out.presentation).diag;
    out.finite = true;
    out.order = 1;
    for (const Integer& d : out.snf) {
        if (d == 0) out.finite = false;
        out.order *= d;
    }
    if (out.finite) out.order = abs_int(out.order);

    // independent order oracle
    Integer oracle = detail::resultant_with_qth_roots(detail::alexander_numerator(s), q);
    if (out.finite) {
        if (oracle != out.order)
            fail(ErrorKind::OracleMismatch, "SNF order " + out.order.str() + " != resultant oracle " + oracle.str());
    } else if (oracle != 0) {
        fail(ErrorKind::OracleMismatch, "infinite homology but nonzero resultant " + oracle.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Deck action on H_1(M_q; Z_p).

struct DeckAction {
    std::int64_t q = 2, p = 3;
    ZpMatrix action;  // induced on the quotient H_1 (x) Z_p
    std::vector<std::pair<std::int64_t, std::vector<ZpVector>>> eigenspaces;  // eigenvalue -> basis
};

inline DeckAction deck_action(const SeifertMatrix& s, std::int64_t q, std::int64_t p) {
    if (!is_prime(p) || p == 2) fail(ErrorKind::PreconditionFailed, "p must be an odd prime");
    CoverHomology cover = cover_homology(s, q);
    if (!cover.finite || cover.order % p != 0)
        fail(ErrorKind::PreconditionFailed, "p must divide the cover order");
    size_t r = s.size();
    ZpMatrix vp = zp_reduce(s.matrix(), p);
    ZpMatrix u = zp_mul(zp_inverse(vp, p), zp_reduce(s.matrix().transpose(), p), p);  // V^-1 V^t

    // quotient Z_p^r / column space of the presentation
    ZpMatrix pres = zp_reduce(cover.presentation, p);
    // the action must preserve the relation lattice
    if (zp_mul(u, pres, p) != zp_mul(pres, u, p))
        fail(ErrorKind::Internal, "deck action does not commute with the presentation");
    ZpMatrix rows = pres.transpose();  // row space = column space of pres
    auto pivots = zp_rref(rows, p);
    std::vector<bool> is_pivot(r, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> coords;  // complement coordinates give the quotient basis
    for (size_t c = 0; c < r; ++c)
        if (!is_pivot[c]) coords.push_back(c);
    size_t d = coords.size();

    auto reduce_vec = [&](ZpVector v) {
        for (size_t k = 0; k < pivots.size(); ++k) {
            std::int64_t c = v[pivots[k]];
            if (c == 0) continue;
            for (size_t j = 0; j < r; ++j) v[j] = mod_i64(v[j] - c * rows(k, j), p);
        }
        return v;
    };

    DeckAction out;
    out.q = q;
    out.p = p;
    out.action = ZpMatrix(d, d, 0);
    for (size_t c = 0; c < d; ++c) {
        ZpVector img(r, 0);
        for (size_t i = 0; i < r; ++i) img[i] = u(i, coords[c]);
        img = reduce_vec(std::move(img));
        for (size_t i = 0; i < d; ++i) out.action(i, c) = img[coords[i]];
    }

    // deck relation on the quotient
    ZpMatrix acc = ZpMatrix::identity(d, 1);
    for (std::int64_t i = 0; i < q; ++i) acc = zp_mul(acc, out.action, p);
    if (acc != ZpMatrix::identity(d, 1)) fail(ErrorKind::Internal, "deck action does not satisfy U^q = I");

    for (std::int64_t lambda = 0; lambda < p; ++lambda) {
        if (pow_mod(lambda, q, p) != 1) continue;
        ZpMatrix shifted = out.action;
        for (size_t i = 0; i < d; ++i) shifted(i, i) = mod_i64(shifted(i, i) - lambda, p);
        auto kernel = zp_kernel(shifted, p);
        if (!kernel.empty()) out.eigenspaces.emplace_back(lambda, std::move(kernel));
    }
    if (q % p != 0) {
        size_t total = 0;
        for (const auto& [lambda, basis] : out.eigenspaces) total += basis.size();
        if (total != d) fail(ErrorKind::Internal, "deck action not diagonalizable over Z_p");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linking form of the 2-fold cover on an elementary abelian p-part.

struct LinkingFormZp {
    std::int64_t p = 3;
    size_t dim = 0;
    ZpMatrix gram;  // symmetric, nonsingular; values in (1/p)Z/Z recorded as Z_p
};

inline LinkingFormZp linking_form_2fold(const SeifertMatrix& s, std::int64_t p) {
    if (!is_prime(p) || p == 2) fail(ErrorKind::PreconditionFailed, "p must be an odd prime");
    if (s.is_link_case() || s.size() % 2 != 0) fail(ErrorKind::OddRank, "linking form needs knot-valid matrices");
    IntMatrix w = s.matrix() + s.matrix().transpose();
    if (s.size() > 0 && det_integer(w) == 0)
        fail(ErrorKind::PreconditionFailed, "V + V^t must be nonsingular over Q");
    SmithResult snf = smith_normal_form(w);
    std::vector<size_t> idx;
    std::vector<Integer> cofactor;  // d_i / p for the selected generators
    for (size_t i = 0; i < snf.diag.size(); ++i) {
        if (snf.diag[i] % p != 0) continue;
        if (snf.diag[i] % (p * p) == 0)
            fail(ErrorKind::NotElementaryAbelian, "p-part of H_1(M_2) has exponent > p");
        idx.push_back(i);
        cofactor.push_back(snf.diag[i] / p);
    }
    LinkingFormZp out;
    out.p = p;
    out.dim = idx.size();
    out.gram = ZpMatrix(out.dim, out.dim, 0);
    if (idx.empty()) return out;

    // linking of the generators S^{-1} e_i is ((S W S^t)^{-1})_{ij}
    IntMatrix sws = snf.S * w * snf.S.transpose();
    size_t n = sws.rows();
    Integer ddet = det_integer(sws);
    // inverse via adjugate over Q: entry = adj_ij / det
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a; b < idx.size(); ++b) {
            Integer adj = det_integer(sws.minor_matrix(idx[b], idx[a]));
            if ((idx[a] + idx[b]) % 2) adj = -adj;
            // value = p * (d_a/p) * (d_b/p) * adj / det, reduced mod p
            Rational val = Rational(p) * Rational(cofactor[a]) * Rational(cofactor[b]) * make_rational(adj, ddet);
            Integer nu = num(val), de = den(val);
            if (de % p == 0) fail(ErrorKind::Internal, "linking value has p in the denominator");
            std::int64_t g = mod_i64(int_mod(nu, p) * inv_mod(int_mod(de, p), p), p);
            out.gram(a, b) = g;
            out.gram(b, a) = g;
        }
    // the restricted linking form must be nonsingular over Z_p
    ZpMatrix check = out.gram;
    if (zp_rref(check, p).size() != out.dim) fail(ErrorKind::Internal, "linking form singular over Z_p");
    (void)n;
    return out;
}

// ---------------------------------------------------------------------------
// Metabolizer enumeration over Z_p.

struct Metabolizer {
    std::vector<ZpVector> basis;  // canonical RREF rows
    bool equivariant = false;
};

inline std::vector<Metabolizer> enumerate_metabolizers(const LinkingFormZp& f,
                                                       const std::optional<ZpMatrix>& deck,
                                                       bool equivariant_only) {
    if (f.dim % 2 != 0) fail(ErrorKind::DimensionMismatch, "metabolizers need even dimension");
    std::vector<Metabolizer> out;
    if (f.dim == 0) {
        out.push_back({{}, true});
        return out;
    }
    double budget = 1;
    for (size_t i = 0; i < f.dim; ++i) budget *= static_cast<double>(f.p);
    if (budget > 1e7) fail(ErrorKind::TooLarge, "p^dim exceeds the desk-scale guard");

    size_t n = f.dim, k = f.dim / 2;
    std::vector<size_t> pivot_cols(k);
    // iterate over pivot-column combinations
    std::vector<size_t> comb(k);
    for (size_t i = 0; i < k; ++i) comb[i] = i;
    auto next_comb = [&]() {
        size_t i = k;
        while (i-- > 0) {
            if (comb[i] != i + n - k) {
                ++comb[i];
                for (size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    auto is_isotropic = [&](const std::vector<ZpVector>& rows) {
        for (size_t u = 0; u < rows.size(); ++u)
            for (size_t w = u; w < rows.size(); ++w) {
                std::int64_t acc = 0;
                for (size_t i = 0; i < n; ++i) {
                    if (rows[u][i] == 0) continue;
                    for (size_t j = 0; j < n; ++j)
                        acc = mod_i64(acc + rows[u][i] * f.gram(i, j) % f.p * rows[w][j], f.p);
                }
                if (acc != 0) return false;
            }
        return true;
    };
    auto in_row_space = [&](const std::vector<ZpVector>& rows, ZpVector v) {
        // rows are in RREF with pivots comb[]
        for (size_t r = 0; r < rows.size(); ++r) {
            std::int64_t c = v[comb[r]];
            if (c == 0) continue;
            for (size_t j = 0; j < n; ++j) v[j] = mod_i64(v[j] - c * rows[r][j], f.p);
        }
        for (std::int64_t x : v)
            if (x != 0) return false;
        return true;
    };

    do {
        std::vector<bool> is_pivot(n, false);
        for (size_t c : comb) is_pivot[c] = true;
        // free positions: (row r, col j) with j > comb[r], j not a pivot
        std::vector<std::pair<size_t, size_t>> free_pos;
        for (size_t r = 0; r < k; ++r)
            for (size_t j = comb[r] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(r, j);
        std::vector<std::int64_t> odom(free_pos.size(), 0);
        while (true) {
            std::vector<ZpVector> rows(k, ZpVector(n, 0));
            for (size_t r = 0; r < k; ++r) rows[r][comb[r]] = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) rows[free_pos[i].first][free_pos[i].second] = odom[i];
            if (is_isotropic(rows)) {
                bool equi = true;
                if (deck) {
                    for (size_t r = 0; r < k && equi; ++r) {
                        ZpVector img(n, 0);
                        for (size_t i = 0; i < n; ++i)
                            for (size_t j = 0; j < n; ++j)
                                img[i] = mod_i64(img[i] + (*deck)(i, j) * rows[r][j], f.p);
                        if (!in_row_space(rows, img)) equi = false;
                    }
                }
                if (!equivariant_only || equi) out.push_back({rows, equi});
            }
            // advance odometer
            size_t pos = 0;
            while (pos < odom.size() && ++odom[pos] == f.p) odom[pos++] = 0;
            if (pos == odom.size() && !odom.empty()) break;
            if (odom.empty()) break;
        }
    } while (next_comb());
    return out;
}

}  // namespace concordia
