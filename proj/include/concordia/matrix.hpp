#pragma once

// Dense matrices over an arbitrary exact coefficient type, plus the handful
// of exact algorithms the rest of the library needs: fraction-free (Bareiss)
// determinants over integral domains, Gaussian elimination over fields, and
// integer Smith normal form with recorded unimodular transforms.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/laurent.hpp"
#include "concordia/numbers.hpp"

namespace concordia {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t r, size_t c, const T& fill = T()) : rows_(r), cols_(c), data_(r * c, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) fail(ErrorKind::Internal, "ragged matrix initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(size_t n, const T& one = T(1), const T& zero = T()) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix addition");
        Matrix r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix subtraction");
        Matrix r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] - b.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& c, const Matrix& m) {
        Matrix r = m;
        for (auto& v : r.data_) v = c * v;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    void set_block(size_t i0, size_t j0, const Matrix& m) {
        for (size_t i = 0; i < m.rows_; ++i)
            for (size_t j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
    }
    Matrix block(size_t i0, size_t j0, size_t r, size_t c) const {
        Matrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }
    // Removes one row and one column.
    Matrix minor_matrix(size_t row, size_t col) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m(mi, mj) = (*this)(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        r.set_block(0, 0, a);
        r.set_block(a.rows_, a.cols_, b);
        return r;
    }

    template <class U, class F>
    Matrix<U> map(F f) const {
        Matrix<U> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    void swap_rows(size_t i, size_t j) {
        for (size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(size_t i, size_t j) {
        for (size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

  private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

// ---------------------------------------------------------------------------
// Determinants.

// Fraction-free Bareiss elimination; ExactDiv(a, b) must perform the exact
// division guaranteed by the Sylvester identity.  Works over any integral
// domain.
template <class T, class IsZero, class ExactDiv>
T det_bareiss(Matrix<T> m, IsZero is_zero, ExactDiv exact_div, const T& one) {
    if (!m.is_square()) fail(ErrorKind::DimensionMismatch, "determinant of nonsquare matrix");
    size_t n = m.rows();
    if (n == 0) return one;
    T prev = one;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            size_t piv = k + 1;
            while (piv < n && is_zero(m(piv, k))) ++piv;
            if (piv == n) return T();
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

inline Integer det_integer(const IntMatrix& m) {
    return det_bareiss(
        m, [](const Integer& x) { return x == 0; },
        [](const Integer& a, const Integer& b) {
            if (b == 0) fail(ErrorKind::Internal, "Bareiss division by zero");
            return Integer(a / b);
        },
        Integer(1));
}

inline LaurentPoly det_laurent(const Matrix<LaurentPoly>& m) {
    return det_bareiss(
        m, [](const LaurentPoly& p) { return p.is_zero(); },
        [](const LaurentPoly& a, const LaurentPoly& b) { return laurent_exact_div(a, b); }, LaurentPoly::one());
}

// Gaussian determinant over a field (needs operator/ and IsZero).
template <class T, class IsZero>
T det_field(Matrix<T> m, IsZero is_zero, const T& one) {
    if (!m.is_square()) fail(ErrorKind::DimensionMismatch, "determinant of nonsquare matrix");
    size_t n = m.rows();
    T det = one;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && is_zero(m(piv, k))) ++piv;
        if (piv == n) return T();
        if (piv != k) {
            m.swap_rows(k, piv);
            det = -det;
        }
        det = det * m(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (is_zero(m(i, k))) continue;
            T f = m(i, k) / m(k, k);
            for (size_t j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

// Gauss-Jordan inverse over a field; throws SingularBaseChange when singular.
template <class T, class IsZero>
Matrix<T> inverse_field(Matrix<T> m, IsZero is_zero, const T& one) {
    if (!m.is_square()) fail(ErrorKind::DimensionMismatch, "inverse of nonsquare matrix");
    size_t n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n, one);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && is_zero(m(piv, k))) ++piv;
        if (piv == n) fail(ErrorKind::SingularBaseChange, "matrix not invertible");
        if (piv != k) {
            m.swap_rows(k, piv);
            inv.swap_rows(k, piv);
        }
        T d = m(k, k);
        for (size_t j = 0; j < n; ++j) {
            m(k, j) = m(k, j) / d;
            inv(k, j) = inv(k, j) / d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) continue;
            T f = m(i, k);
            for (size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - f * m(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

// Exact inverse of a unimodular integer matrix.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    Integer d = det_integer(m);
    if (d != 1 && d != -1) fail(ErrorKind::Internal, "inverse_unimodular needs det = +-1");
    size_t n = m.rows();
    IntMatrix adj(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Integer c = det_integer(m.minor_matrix(j, i));
            if ((i + j) % 2) c = -c;
            adj(i, j) = c;
        }
    if (d == -1) adj = -adj;
    return adj;
}

inline IntMatrix integer_pow(IntMatrix base, std::int64_t e) {
    if (!base.is_square()) fail(ErrorKind::DimensionMismatch, "power of nonsquare matrix");
    IntMatrix r = IntMatrix::identity(base.rows(), Integer(1));
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Smith normal form with transforms: S * A * T = diag(d_1..d_r, 0..),
// d_i >= 0 and d_i | d_{i+1}; S, T unimodular.

struct SmithResult {
    std::vector<Integer> diag;  // length min(rows, cols)
    IntMatrix S, T;
};

inline SmithResult smith_normal_form(IntMatrix a) {
    size_t rows = a.rows(), cols = a.cols();
    IntMatrix S = IntMatrix::identity(rows, Integer(1));
    IntMatrix T = IntMatrix::identity(cols, Integer(1));
    size_t n = std::min(rows, cols);

    auto add_row = [&](size_t dst, size_t src, const Integer& f) {
        for (size_t j = 0; j < cols; ++j) a(dst, j) += f * a(src, j);
        for (size_t j = 0; j < rows; ++j) S(dst, j) += f * S(src, j);
    };
    auto add_col = [&](size_t dst, size_t src, const Integer& f) {
        for (size_t i = 0; i < rows; ++i) a(i, dst) += f * a(i, src);
        for (size_t i = 0; i < cols; ++i) T(i, dst) += f * T(i, src);
    };

    for (size_t k = 0; k < n; ++k) {
        while (true) {
            // locate a nonzero entry of minimal absolute value
            bool found = false;
            size_t pi = k, pj = k;
            Integer best = 0;
            for (size_t i = k; i < rows; ++i)
                for (size_t j = k; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Integer v = abs_int(a(i, j));
                    if (!found || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) break;  // remaining block zero
            if (pi != k) {
                a.swap_rows(k, pi);
                S.swap_rows(k, pi);
            }
            if (pj != k) {
                a.swap_cols(k, pj);
                T.swap_cols(k, pj);
            }
            bool reduced = true;
            for (size_t i = k + 1; i < rows; ++i) {
                if (a(i, k) == 0) continue;
                Integer q = a(i, k) / a(k, k);
                add_row(i, k, -q);
                if (a(i, k) != 0) reduced = false;
            }
            for (size_t j = k + 1; j < cols; ++j) {
                if (a(k, j) == 0) continue;
                Integer q = a(k, j) / a(k, k);
                add_col(j, k, -q);
                if (a(k, j) != 0) reduced = false;
            }
            if (!reduced) continue;
            bool cleared = true;
            for (size_t i = k + 1; i < rows && cleared; ++i)
                if (a(i, k) != 0) cleared = false;
            for (size_t j = k + 1; j < cols && cleared; ++j)
                if (a(k, j) != 0) cleared = false;
            if (!cleared) continue;
            // enforce the divisibility chain
            bool divisible = true;
            for (size_t i = k + 1; i < rows && divisible; ++i)
                for (size_t j = k + 1; j < cols && divisible; ++j)
                    if (a(i, j) % a(k, k) != 0) {
                        add_row(k, i, Integer(1));
                        divisible = false;
                    }
            if (divisible) break;
        }
    }
    SmithResult out;
    out.diag.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        Integer d = a(k, k);
        if (d < 0) {
            d = -d;
            for (size_t j = 0; j < cols; ++j) T(j, k) = -T(j, k);
        }
        out.diag.push_back(d);
    }
    out.S = std::move(S);
    out.T = std::move(T);
    return out;
}

}  // namespace concordia
