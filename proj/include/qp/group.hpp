#pragma once

// The groups G_k = ((GL2 x Gm^{n+1}) x| S_{n+1}) / N_k acting on the diagonal
// slice, by representatives (M, (lambda_i), sigma). N_k is the central
// one-parameter subgroup generated by (diag(l^-k, l^-k), (l,...,l), id), so
// equality of classes is decidable by solving for the single scalar l.
//
// Composition is the semidirect-product law
//   (M, lambda, sigma) (M', lambda', sigma') =
//       (M M', lambda * sigma(lambda'), sigma sigma')
// with sigma acting on tuples by (sigma * v)_i = v_{sigma^{-1}(i)}, and the
// action on W is column i  <-  lambda_i^k * M * (column sigma^{-1}(i)).
// Both conventions are pinned by tests: the composition law is associative
// and act(g h, w) = act(g, act(h, w)).

#include <utility>
#include <vector>

#include "qp/permutation.hpp"
#include "qp/slice.hpp"

namespace qp {

struct GkElement {
    int n;                    // acts on 2x(n+1) slice points
    long k;                   // level; nonzero
    RatMatrix m;              // 2x2, invertible
    std::vector<Rat> lambdas; // n+1 nonzero entries
    Permutation sigma;        // on {0..n}

    GkElement(int n_, long k_, RatMatrix m_, std::vector<Rat> lambdas_, Permutation sigma_)
        : n(n_), k(k_), m(std::move(m_)), lambdas(std::move(lambdas_)), sigma(std::move(sigma_)) {
        if (k == 0) throw BadParamsError("level must be nonzero");
        if (m.rows() != 2 || m.cols() != 2) throw SizeMismatchError("GL2 component must be 2x2");
        if (det(m) == 0) throw SingularMatrixError("GL2 component is singular");
        if (static_cast<int>(lambdas.size()) != n + 1 || sigma.size() != n + 1)
            throw SizeMismatchError("torus/permutation size mismatch");
        for (const Rat& l : lambdas)
            if (l == 0) throw BadParamsError("torus coordinates must be nonzero");
    }

    static GkElement identity(int n, long k) {
        return GkElement(n, k, RatMatrix::identity(2), std::vector<Rat>(n + 1, Rat(1)),
                         Permutation::id(n + 1));
    }

    // the N_k generator at parameter l: (diag(l^-k, l^-k), (l,...,l), id)
    static GkElement central(int n, long k, const Rat& l) {
        if (l == 0) throw BadParamsError("central parameter must be nonzero");
        Rat s = pow_rat(l, -k);
        RatMatrix m{{s, Rat(0)}, {Rat(0), s}};
        return GkElement(n, k, std::move(m), std::vector<Rat>(n + 1, l), Permutation::id(n + 1));
    }
};

inline void require_compatible(const GkElement& g, const GkElement& h) {
    if (g.k != h.k) throw LevelMismatchError("elements live at different levels");
    if (g.n != h.n) throw SizeMismatchError("elements act on different slices");
}

inline GkElement compose(const GkElement& g, const GkElement& h) {
    require_compatible(g, h);
    std::vector<Rat> lam = g.sigma.permute(h.lambdas); // (sigma_g * lambda_h)
    for (int i = 0; i <= g.n; ++i) lam[i] *= g.lambdas[i];
    return GkElement(g.n, g.k, g.m * h.m, std::move(lam), g.sigma * h.sigma);
}

inline GkElement inverse(const GkElement& g) {
    Permutation si = g.sigma.inverse();
    std::vector<Rat> lam(g.n + 1);
    for (int i = 0; i <= g.n; ++i) lam[i] = 1 / g.lambdas[g.sigma(i)];
    return GkElement(g.n, g.k, inverse(g.m), std::move(lam), std::move(si));
}

// h = g * (diag(l^-k, l^-k), (l,...,l), id) for some nonzero rational l; the
// candidate l is forced by the first torus coordinate.
inline bool equal_in_gk(const GkElement& g, const GkElement& h) {
    require_compatible(g, h);
    if (g.sigma != h.sigma) return false;
    Rat l = h.lambdas[0] / g.lambdas[0]; // nonzero: torus coordinates never vanish
    for (int i = 1; i <= g.n; ++i)
        if (h.lambdas[i] != l * g.lambdas[i]) return false;
    Rat s = pow_rat(l, -g.k);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (h.m(i, j) != s * g.m(i, j)) return false;
    return true;
}

inline bool is_identity_in_gk(const GkElement& g) {
    return equal_in_gk(g, GkElement::identity(g.n, g.k));
}

// column i of the result is lambda_i^k * M * (column sigma^{-1}(i) of w)
inline SlicePoint act(const GkElement& g, const SlicePoint& w) {
    if (g.n != w.n) throw SizeMismatchError("element and point have different n");
    if (!in_slice(w)) throw NotInSliceError("acting on a point outside the slice");
    Permutation si = g.sigma.inverse();
    std::vector<Rat> a(w.n + 1), b(w.n + 1);
    for (int i = 0; i <= w.n; ++i) {
        Rat s = pow_rat(g.lambdas[i], g.k);
        int src = si(i);
        a[i] = s * (g.m(0, 0) * w.a[src] + g.m(0, 1) * w.b[src]);
        b[i] = s * (g.m(1, 0) * w.a[src] + g.m(1, 1) * w.b[src]);
    }
    return SlicePoint(w.n, std::move(a), std::move(b));
}

// level change G_b -> G_a for a | b: raise the torus block to the power b/a.
// The underlying action on W is unchanged: (lambda^(b/a))^a = lambda^b.
inline GkElement reduce_level(const GkElement& g, long a) {
    if (a == 0 || g.k % a != 0) throw NotDivisorError("target level must divide the source level");
    long e = g.k / a;
    std::vector<Rat> lam(g.n + 1);
    for (int i = 0; i <= g.n; ++i) lam[i] = pow_rat(g.lambdas[i], e);
    return GkElement(g.n, a, g.m, std::move(lam), g.sigma);
}

} // namespace qp
