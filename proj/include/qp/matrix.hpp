#pragma once

// Small dense matrices over exact scalars. Everything here is desk scale
// (dimensions up to a few dozen), so the algorithms favour exactness and
// determinism over asymptotics: Bareiss fraction-free elimination for integer
// determinants, plain Gauss-Jordan over the rationals for inverses/kernels.

#include <initializer_list>
#include <utility>
#include <vector>

#include "qp/rational.hpp"

namespace qp {

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
        if (rows <= 0 || cols <= 0) throw BadParamsError("matrix dimensions must be positive");
    }
    Mat(int rows, int cols, std::vector<T> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows <= 0 || cols <= 0) throw BadParamsError("matrix dimensions must be positive");
        if (e_.size() != static_cast<size_t>(rows) * cols)
            throw SizeMismatchError("entry count does not match dimensions");
    }
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        if (rows_ == 0 || cols_ == 0) throw BadParamsError("empty matrix literal");
        e_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw SizeMismatchError("ragged matrix literal");
            for (const auto& v : row) e_.push_back(v);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw SizeMismatchError("matrix product shape mismatch");
        Mat p(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix sum shape mismatch");
        Mat s = *this;
        for (size_t i = 0; i < e_.size(); ++i) s.e_[i] += o.e_[i];
        return s;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix difference shape mismatch");
        Mat s = *this;
        for (size_t i = 0; i < e_.size(); ++i) s.e_[i] -= o.e_[i];
        return s;
    }

    friend Mat operator*(const T& c, const Mat& m) {
        Mat s = m;
        for (auto& v : s.e_) v *= c;
        return s;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != T(0)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (v != T(0)) return false;
        return true;
    }

  private:
    int rows_, cols_;
    std::vector<T> e_;
};

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rat>;

// Fraction-free (Bareiss) determinant; exact, no rational intermediates.
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatchError("determinant of non-square matrix");
    int n = m.rows();
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

// Clears denominators row by row and runs Bareiss; det = int det / product of scales.
inline Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatchError("determinant of non-square matrix");
    int n = m.rows();
    IntMatrix z(n, n);
    Int scale(1);
    for (int i = 0; i < n; ++i) {
        Int l(1);
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rat v = m(i, j) * Rat(l);
            z(i, j) = v.get_num();
        }
        scale *= l;
    }
    Rat r(det(z), scale);
    r.canonicalize();
    return r;
}

inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatchError("inverse of non-square matrix");
    int n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularMatrixError("matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        Rat d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// One kernel vector of a square matrix with nullity >= 1, scaled to a
// primitive integer vector with positive leading entry (deterministic).
inline std::vector<Rat> kernel_vector(const RatMatrix& m) {
    int n = m.rows(), c = m.cols();
    RatMatrix a = m;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < c && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < c; ++j) std::swap(a(r, j), a(piv, j));
        Rat d = a(r, col);
        for (int j = 0; j < c; ++j) a(r, j) /= d;
        for (int i = 0; i < n; ++i) {
            if (i == r || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = 0; j < c; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    int free_col = -1;
    {
        std::vector<bool> is_piv(c, false);
        for (int p : pivot_col) is_piv[p] = true;
        for (int j = 0; j < c; ++j)
            if (!is_piv[j]) {
                free_col = j;
                break;
            }
    }
    if (free_col < 0) throw SingularMatrixError("matrix has trivial kernel");
    std::vector<Rat> v(c, Rat(0));
    v[free_col] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a(i, free_col);
    // clear denominators, divide by content, fix sign
    Int l(1);
    for (const Rat& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    Int g(0);
    std::vector<Int> w(c);
    for (int j = 0; j < c; ++j) {
        Rat q = v[j] * Rat(l);
        w[j] = q.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
    }
    int lead_sign = 0;
    for (int j = 0; j < c && lead_sign == 0; ++j) lead_sign = sgn(w[j]);
    for (int j = 0; j < c; ++j) {
        mpz_divexact(w[j].get_mpz_t(), w[j].get_mpz_t(), g.get_mpz_t());
        if (lead_sign < 0) w[j] = -w[j];
        v[j] = Rat(w[j]);
    }
    return v;
}

// B^T * Q * B
inline RatMatrix congruence(const RatMatrix& b, const RatMatrix& q) { return b.transpose() * q * b; }

} // namespace qp
