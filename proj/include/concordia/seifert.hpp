#pragma once

// Seifert matrices and every block-matrix construction performed on them:
// validation, mirror / reverse / connected sum, S-equivalence enlargement,
// the crossing-change triple, the genus-2 mutation pair, and the equivariant
// V^eps builder for strongly positive amphicheiral forms.
//
// Basis ordering inside assembled block matrices follows the source displays
// verbatim: the A-block first, auxiliary generators last (x, y, tau x, tau y
// for V^eps).  Congruence matrices elsewhere are written against these fixed
// indices.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/matrix.hpp"
#include "concordia/numbers.hpp"

namespace concordia {

using IntVec = std::vector<Integer>;

class SeifertMatrix {
  public:
    SeifertMatrix() : link_case_(false), rationally_nonsingular_(true) {}

    // Validates det(V - V^t) = +-1 (throws NotSeifert otherwise) and records
    // whether det((V - V^t)(V + V^t)) != 0.
    static SeifertMatrix validate(IntMatrix v, std::string label = "") {
        if (!v.is_square()) fail(ErrorKind::NotSeifert, "matrix is not square");
        IntMatrix skew = v - v.transpose();
        Integer d = det_integer(skew);
        if (d != 1 && d != -1)
            fail(ErrorKind::NotSeifert, "det(V - V^t) = " + d.str() + ", expected +-1");
        SeifertMatrix s;
        s.v_ = std::move(v);
        s.label_ = std::move(label);
        s.link_case_ = false;
        s.rationally_nonsingular_ = det_integer(skew * (s.v_ + s.v_.transpose())) != 0;
        return s;
    }

    // Odd-rank matrices appear only as intermediate values in skein
    // smoothings (two-component links); they carry a flag and are rejected
    // by every exported invariant.
    static SeifertMatrix link_case(IntMatrix v, std::string label = "") {
        if (!v.is_square()) fail(ErrorKind::NotSeifert, "matrix is not square");
        SeifertMatrix s;
        s.v_ = std::move(v);
        s.label_ = std::move(label);
        s.link_case_ = true;
        s.rationally_nonsingular_ = false;
        return s;
    }

    size_t size() const { return v_.rows(); }
    const IntMatrix& matrix() const { return v_; }
    const std::string& label() const { return label_; }
    bool is_link_case() const { return link_case_; }
    bool rationally_nonsingular() const { return rationally_nonsingular_; }

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

  private:
    IntMatrix v_;
    std::string label_;
    bool link_case_;
    bool rationally_nonsingular_;
};

inline SeifertMatrix mirror(const SeifertMatrix& s) {
    return SeifertMatrix::validate(-s.matrix().transpose(), s.label().empty() ? "" : "mirror(" + s.label() + ")");
}
inline SeifertMatrix reverse(const SeifertMatrix& s) {
    return SeifertMatrix::validate(s.matrix().transpose(), s.label().empty() ? "" : "reverse(" + s.label() + ")");
}
inline SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    std::string label;
    if (!a.label().empty() || !b.label().empty()) label = a.label() + " # " + b.label();
    return SeifertMatrix::validate(IntMatrix::block_diag(a.matrix(), b.matrix()), label);
}

namespace detail {

// The enlarged (r+2)x(r+2) matrix of the crossing display, with eps = 0 for
// the negative crossing and eps = -1 for the positive one.
inline IntMatrix crossing_matrix(const IntMatrix& a, const IntVec& col, const Integer& b, const Integer& eps) {
    size_t r = a.rows();
    if (col.size() != r) fail(ErrorKind::DimensionMismatch, "column height must match the base matrix");
    IntMatrix v(r + 2, r + 2, Integer(0));
    v.set_block(0, 0, a);
    for (size_t i = 0; i < r; ++i) {
        v(i, r) = col[i];
        v(r, i) = col[i];
    }
    v(r, r) = b;
    v(r, r + 1) = 1;
    v(r + 1, r + 1) = eps;
    return v;
}

}  // namespace detail

// S-equivalence enlargement: the eps = 0 crossing matrix.
inline SeifertMatrix s_enlarge(const SeifertMatrix& a, const IntVec& col, const Integer& b) {
    return SeifertMatrix::validate(detail::crossing_matrix(a.matrix(), col, b, Integer(0)),
                                   a.label().empty() ? "" : "enlarge(" + a.label() + ")");
}

struct CrossingTriple {
    SeifertMatrix plus;    // eps = -1
    SeifertMatrix minus;   // eps = 0
    SeifertMatrix smooth;  // last row and column deleted; link case
    SeifertMatrix base;    // A
    IntVec column;         // a
    Integer b;
};

inline CrossingTriple crossing_triple(const SeifertMatrix& a, const IntVec& col, const Integer& b) {
    CrossingTriple t;
    IntMatrix plus = detail::crossing_matrix(a.matrix(), col, b, Integer(-1));
    IntMatrix minus = detail::crossing_matrix(a.matrix(), col, b, Integer(0));
    size_t r = a.size();
    t.plus = SeifertMatrix::validate(std::move(plus));
    t.minus = SeifertMatrix::validate(std::move(minus));
    t.smooth = SeifertMatrix::link_case(t.plus.matrix().block(0, 0, r + 1, r + 1));
    t.base = a;
    t.column = col;
    t.b = b;
    return t;
}

// ---------------------------------------------------------------------------
// Genus-2 mutation pair.

struct Genus2MutationPair {
    IntMatrix A, C;
    IntVec b;             // height = dim C
    SeifertMatrix V;      // [[A, B^t], [B, C]] with B = (0 | b)
    SeifertMatrix Vstar;  // C replaced by C^t
};

inline Genus2MutationPair genus2_mutant(const IntMatrix& A, const IntMatrix& C, const IntVec& b) {
    if (!A.is_square() || !C.is_square()) fail(ErrorKind::InvalidBlock, "blocks must be square");
    if (A.rows() < 1) fail(ErrorKind::InvalidBlock, "A must have dimension >= 1");
    if (b.size() != C.rows()) fail(ErrorKind::DimensionMismatch, "b must have the dimension of C");
    Integer da = det_integer(A - A.transpose());
    if (da != 1 && da != -1) fail(ErrorKind::InvalidBlock, "A is not an algebraic Seifert matrix");
    Integer dc = det_integer(C - C.transpose());
    if (dc != 1 && dc != -1) fail(ErrorKind::InvalidBlock, "C is not an algebraic Seifert matrix");

    size_t m = A.rows(), c = C.rows();
    IntMatrix B(c, m, Integer(0));
    for (size_t i = 0; i < c; ++i) B(i, m - 1) = b[i];

    auto assemble = [&](const IntMatrix& lower_right) {
        IntMatrix v(m + c, m + c, Integer(0));
        v.set_block(0, 0, A);
        v.set_block(0, m, B.transpose());
        v.set_block(m, 0, B);
        v.set_block(m, m, lower_right);
        return v;
    };
    Genus2MutationPair pair;
    pair.A = A;
    pair.C = C;
    pair.b = b;
    pair.V = SeifertMatrix::validate(assemble(C));
    pair.Vstar = SeifertMatrix::validate(assemble(C.transpose()));

    // V - V^t = (A - A^t) + (C - C^t) as a direct sum
    IntMatrix skew = pair.V.matrix() - pair.V.matrix().transpose();
    IntMatrix expected = IntMatrix::block_diag(A - A.transpose(), C - C.transpose());
    if (skew != expected) fail(ErrorKind::Internal, "V - V^t is not the expected direct sum");
    return pair;
}

// ---------------------------------------------------------------------------
// Equivariant data for strongly positive amphicheiral forms.

struct AmphicheiralData {
    IntMatrix A;      // r x r
    IntMatrix T;      // involution, T^2 = I
    IntVec a;         // height r
    Integer b;
    Integer epsilon;  // 0 or -1
};

inline bool equivariance_holds(const IntMatrix& A, const IntMatrix& T) {
    if (!A.is_square() || !T.is_square() || A.rows() != T.rows()) return false;
    size_t r = T.rows();
    if (T * T != IntMatrix::identity(r, Integer(1))) return false;
    return T.transpose() * A * T == -A.transpose();
}

// The (r+4)x(r+4) matrix with rows/columns ordered (A-block, x, y, tau x,
// tau y).
inline SeifertMatrix build_v_epsilon(const AmphicheiralData& d) {
    size_t r = d.A.rows();
    if (d.a.size() != r) fail(ErrorKind::DimensionMismatch, "column height must match A");
    if (d.epsilon != 0 && d.epsilon != -1) fail(ErrorKind::Internal, "epsilon must be 0 or -1");
    if (!equivariance_holds(d.A, d.T)) fail(ErrorKind::EquivarianceViolated, "T^t A T != -A^t or T^2 != I");

    IntMatrix v(r + 4, r + 4, Integer(0));
    v.set_block(0, 0, d.A);
    // column vectors a and -T^t a
    IntMatrix Tt = d.T.transpose();
    for (size_t i = 0; i < r; ++i) {
        Integer tta = 0;
        for (size_t j = 0; j < r; ++j) tta += Tt(i, j) * d.a[j];
        v(i, r) = d.a[i];         // a
        v(i, r + 2) = -tta;       // -T^t a
        v(r, i) = d.a[i];         // a^t
        Integer atT = 0;
        for (size_t j = 0; j < r; ++j) atT += d.a[j] * d.T(j, i);
        v(r + 2, i) = -atT;       // -a^t T
    }
    v(r, r) = d.b;
    v(r, r + 1) = 1;
    v(r + 1, r + 1) = d.epsilon;
    v(r + 2, r + 2) = -d.b;
    v(r + 3, r + 2) = -1;
    v(r + 3, r + 3) = -d.epsilon;
    return SeifertMatrix::validate(std::move(v));
}

// Constructive family of equivariant data: skew 2x2 blocks M = [[0,m],[-m,0]]
// and N = [[0,n],[-n,0]] with m + n = +-1, A = [[0, M], [N, 0]] and T the
// block swap.  Then T^2 = I, T^t A T = -A^t and det(A - A^t) = (m+n)^4 = 1.
inline AmphicheiralData amphicheiral_generator(const Integer& m, const Integer& n, const IntVec& a,
                                               const Integer& b, const Integer& epsilon) {
    if (m + n != 1 && m + n != -1) fail(ErrorKind::InvalidBlock, "generator family needs m + n = +-1");
    if (a.size() != 4) fail(ErrorKind::DimensionMismatch, "generator family uses 4-dimensional A");
    IntMatrix full(4, 4, Integer(0));
    full(0, 3) = m;
    full(1, 2) = -m;
    full(2, 1) = n;
    full(3, 0) = -n;
    IntMatrix T(4, 4, Integer(0));
    T(0, 2) = T(1, 3) = T(2, 0) = T(3, 1) = 1;
    AmphicheiralData d{full, T, a, b, epsilon};
    if (!equivariance_holds(full, T)) fail(ErrorKind::Internal, "generator family equivariance failed");
    return d;
}

// ---------------------------------------------------------------------------
// Plain-text matrix format: one row per line, whitespace-separated integers.

inline IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<IntVec> rows;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        IntVec row;
        std::string tok;
        while (ls >> tok) {
            try {
                row.emplace_back(tok);
            } catch (const std::exception&) {
                fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad integer \"" + tok + "\"");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) return IntMatrix(0, 0);
    size_t cols = rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            fail(ErrorKind::Parse, "line " + std::to_string(i + 1) + ": expected " + std::to_string(cols) +
                                       " entries, found " + std::to_string(rows[i].size()));
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace concordia
