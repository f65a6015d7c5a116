#pragma once

// Smith normal form over the integers, with both transforms.
//
// Pivot selection is the smallest nonzero entry in absolute value (first hit
// in row-major order on ties), which makes the output deterministic and keeps
// intermediate entries small on the lattice presentations we feed it.

#include <cstdlib>
#include <utility>
#include <vector>

#include "qp/matrix.hpp"

namespace qp {

struct SnfResult {
    std::vector<Int> invariant_factors; // length min(rows, cols); d_i | d_{i+1}, zeros last
    IntMatrix left;                     // unimodular, rows x rows
    IntMatrix right;                    // unimodular, cols x cols
};

// left * m * right = diag(invariant_factors)
inline SnfResult smith_normal_form(const IntMatrix& m) {
    int r = m.rows(), c = m.cols();
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(r);
    IntMatrix right = IntMatrix::identity(c);

    auto row_op = [&](int dst, int src, const Int& q) { // row_dst -= q * row_src
        for (int j = 0; j < c; ++j) a(dst, j) -= q * a(src, j);
        for (int j = 0; j < r; ++j) left(dst, j) -= q * left(src, j);
    };
    auto col_op = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < r; ++i) a(i, dst) -= q * a(i, src);
        for (int i = 0; i < c; ++i) right(i, dst) -= q * right(i, src);
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c; ++k) std::swap(a(i, k), a(j, k));
        for (int k = 0; k < r; ++k) std::swap(left(i, k), left(j, k));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r; ++k) std::swap(a(k, i), a(k, j));
        for (int k = 0; k < c; ++k) std::swap(right(k, i), right(k, j));
    };
    auto row_negate = [&](int i) {
        for (int k = 0; k < c; ++k) a(i, k) = -a(i, k);
        for (int k = 0; k < r; ++k) left(i, k) = -left(i, k);
    };

    int t = 0;
    int steps = std::min(r, c);
    while (t < steps) {
        // smallest nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (a(i, j) == 0) continue;
                Int v = abs(a(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block is zero
        row_swap(t, pi);
        col_swap(t, pj);

        bool dirty = false;
        for (int i = t + 1; i < r; ++i) {
            if (a(i, t) == 0) continue;
            Int q = a(i, t) / a(t, t); // truncated division; remainder strictly smaller
            if (q != 0) row_op(i, t, q);
            if (a(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < c; ++j) {
            if (a(t, j) == 0) continue;
            Int q = a(t, j) / a(t, t);
            if (q != 0) col_op(j, t, q);
            if (a(t, j) != 0) dirty = true;
        }
        if (dirty) continue; // smaller remainders exist; rerun pivot selection

        // divisibility: fold in any entry the pivot does not divide
        bool fixed = true;
        for (int i = t + 1; i < r && fixed; ++i)
            for (int j = t + 1; j < c && fixed; ++j)
                if (a(i, j) % a(t, t) != 0) {
                    row_op(t, i, Int(-1)); // row_t += row_i
                    fixed = false;
                }
        if (!fixed) continue;

        if (a(t, t) < 0) row_negate(t);
        ++t;
    }

    std::vector<Int> factors;
    factors.reserve(steps);
    for (int i = 0; i < steps; ++i) factors.push_back(a(i, i));
    return SnfResult{std::move(factors), std::move(left), std::move(right)};
}

} // namespace qp
