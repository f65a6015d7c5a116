#pragma once

// Pencils of quadrics in P^n: a pair of symmetric (n+1)x(n+1) rational
// matrices spanning a 2-plane of quadratic forms. Smoothness of the base
// complete intersection is read off the discriminant binary form
// det(x0 Q1 + x1 Q2): the intersection is smooth iff that degree-(n+1) form
// has distinct roots.

#include <utility>
#include <vector>

#include "qp/binary_form.hpp"
#include "qp/matrix.hpp"
#include "qp/poly.hpp"

namespace qp {

inline bool linearly_dependent(const RatMatrix& q1, const RatMatrix& q2) {
    if (q1.is_zero() || q2.is_zero()) return true;
    // q2 = t * q1 for the ratio at q1's first nonzero entry
    int pi = -1, pj = -1;
    for (int i = 0; i < q1.rows() && pi < 0; ++i)
        for (int j = 0; j < q1.cols(); ++j)
            if (q1(i, j) != 0) {
                pi = i;
                pj = j;
                break;
            }
    Rat t = q2(pi, pj) / q1(pi, pj);
    for (int i = 0; i < q1.rows(); ++i)
        for (int j = 0; j < q1.cols(); ++j)
            if (q2(i, j) != t * q1(i, j)) return false;
    return true;
}

// det(x0 Q1 + x1 Q2) as a binary form of degree n+1, computed exactly by
// evaluation at t = 0..n+1 and interpolation: det(t Q1 + Q2) is a univariate
// polynomial of degree <= n+1, and D(t, 1) equals it. May be identically zero
// for degenerate inputs.
inline BinaryForm discriminant_form(const RatMatrix& q1, const RatMatrix& q2) {
    if (q1.rows() != q1.cols() || q2.rows() != q2.cols() || q1.rows() != q2.rows())
        throw SizeMismatchError("discriminant form needs two square matrices of equal size");
    int size = q1.rows(); // n + 1
    std::vector<std::pair<Rat, Rat>> samples;
    samples.reserve(size + 1);
    for (int t = 0; t <= size; ++t) {
        RatMatrix m = Rat(t) * q1 + q2;
        samples.push_back({Rat(t), det(m)});
    }
    Poly p = lagrange_interpolate(samples); // degree <= size
    std::vector<Rat> coeffs(size + 1, Rat(0));
    for (int k = 0; k <= p.degree(); ++k) coeffs[size - k] = p[k]; // x0^k x1^(size-k)
    return BinaryForm(std::move(coeffs));
}

struct QuadricPencil {
    int n; // ambient projective dimension, >= 3
    RatMatrix q1, q2;

    QuadricPencil(int n_, RatMatrix q1_, RatMatrix q2_) : n(n_), q1(std::move(q1_)), q2(std::move(q2_)) {
        if (n < 3) throw BadParamsError("pencil needs n >= 3");
        if (q1.rows() != n + 1 || q1.cols() != n + 1 || q2.rows() != n + 1 || q2.cols() != n + 1)
            throw SizeMismatchError("pencil matrices must be (n+1)x(n+1)");
        if (!q1.is_symmetric() || !q2.is_symmetric())
            throw BadParamsError("pencil matrices must be symmetric");
        if (linearly_dependent(q1, q2))
            throw DependentPairError("the two quadrics do not span a pencil");
    }

    bool is_diagonal() const { return q1.is_diagonal() && q2.is_diagonal(); }
};

inline BinaryForm discriminant_form(const QuadricPencil& p) { return discriminant_form(p.q1, p.q2); }

inline bool is_smooth(const QuadricPencil& p) {
    BinaryForm d = discriminant_form(p);
    if (d.is_zero()) return false;
    return is_squarefree(d);
}

// (B^T Q1 B, B^T Q2 B) as a new pencil; the discriminant form picks up det(B)^2.
inline QuadricPencil congruent_pencil(const QuadricPencil& p, const RatMatrix& b) {
    if (det(b) == 0) throw SingularMatrixError("congruence by a singular matrix");
    return QuadricPencil(p.n, congruence(b, p.q1), congruence(b, p.q2));
}

} // namespace qp
