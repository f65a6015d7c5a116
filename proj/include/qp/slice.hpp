#pragma once

// The diagonal slice W: 2x(n+1) matrices whose columns are the coefficient
// pairs of a simultaneously diagonalized pencil sum a_i x_i^2, sum b_i x_i^2.
// Membership in W is the nonvanishing of every 2x2 column minor
// a_i b_j - a_j b_i, which is exactly smoothness of the diagonal complete
// intersection.

#include <utility>
#include <vector>

#include "qp/pencil.hpp"
#include "qp/projective.hpp"

namespace qp {

struct SlicePoint {
    int n;
    std::vector<Rat> a, b;

    SlicePoint(int n_, std::vector<Rat> a_, std::vector<Rat> b_)
        : n(n_), a(std::move(a_)), b(std::move(b_)) {
        if (n < 3) throw BadParamsError("slice point needs n >= 3");
        if (static_cast<int>(a.size()) != n + 1 || static_cast<int>(b.size()) != n + 1)
            throw SizeMismatchError("slice point rows must have n+1 entries");
    }

    Rat minor(int i, int j) const { return a[i] * b[j] - a[j] * b[i]; }

    bool operator==(const SlicePoint& o) const { return n == o.n && a == o.a && b == o.b; }
    bool operator!=(const SlicePoint& o) const { return !(*this == o); }
};

// All minors a_i b_j - a_j b_i for i < j, lexicographic in (i, j).
inline std::vector<Rat> minors(const SlicePoint& w) {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(w.n + 1) * w.n / 2);
    for (int i = 0; i <= w.n; ++i)
        for (int j = i + 1; j <= w.n; ++j) out.push_back(w.minor(i, j));
    return out;
}

inline bool in_slice(const SlicePoint& w) {
    for (int i = 0; i <= w.n; ++i)
        for (int j = i + 1; j <= w.n; ++j)
            if (w.minor(i, j) == 0) return false;
    return true;
}

// Smoothness of the diagonal complete intersection (all minors nonzero).
inline bool is_smooth_diagonal(const SlicePoint& w) { return in_slice(w); }

// prod_i (a_i x0 + b_i x1), with no slice-membership gate; on W this is the
// squarefree degree-(n+1) form theta(w).
inline BinaryForm column_product_form(const SlicePoint& w) {
    BinaryForm f = BinaryForm::constant(Rat(1));
    for (int i = 0; i <= w.n; ++i) f = f * BinaryForm::linear(w.a[i], w.b[i]);
    return f;
}

inline BinaryForm product_form(const SlicePoint& w) {
    if (!in_slice(w)) throw NotInSliceError("point has a vanishing minor");
    return column_product_form(w);
}

// The pencil of diagonal matrices diag(a), diag(b).
inline QuadricPencil embed_diagonal(const SlicePoint& w) {
    if (!in_slice(w)) throw NotInSliceError("point has a vanishing minor");
    RatMatrix d1(w.n + 1, w.n + 1), d2(w.n + 1, w.n + 1);
    for (int i = 0; i <= w.n; ++i) {
        d1(i, i) = w.a[i];
        d2(i, i) = w.b[i];
    }
    return QuadricPencil(w.n, std::move(d1), std::move(d2));
}

// The configuration ([a_0:b_0], ..., [a_n:b_n]) of n+1 distinct points of P^1.
inline std::vector<ProjectiveLinePoint> configuration(const SlicePoint& w) {
    if (!in_slice(w)) throw NotInSliceError("point has a vanishing minor");
    std::vector<ProjectiveLinePoint> pts;
    pts.reserve(w.n + 1);
    for (int i = 0; i <= w.n; ++i) pts.emplace_back(w.a[i], w.b[i]);
    return pts;
}

} // namespace qp
