#pragma once

// Structure maps attached to the G_k family: the kernel of a level change,
// the projective-linear realization of G_{-2}, the sign kernel over a slice
// point, and the two equivariance identities that make the slice embedding
// and the product form maps of stacks.

#include <utility>
#include <vector>

#include "qp/abelian.hpp"
#include "qp/group.hpp"

namespace qp {

// Kernel of G_b -> G_a (a | b): mu_m^{n+1} modulo the diagonal mu_m with
// m = b/a, presented as an abelian group and computed by Smith normal form.
// Order m^n.
inline AbelianGroup kernel_of_reduce(long b, long a, int n) {
    if (a == 0 || b == 0 || b % a != 0) throw NotDivisorError("kernel needs a | b with both nonzero");
    long m = b / a;
    if (m < 0) m = -m;
    if (m == 1) return AbelianGroup::trivial();
    // generators e_0..e_n; relations m e_i = 0 and e_0 + ... + e_n = 0
    IntMatrix rel(n + 2, n + 1);
    for (int i = 0; i <= n; ++i) rel(i, i) = m;
    for (int j = 0; j <= n; ++j) rel(n + 1, j) = 1;
    return group_from_presentation(rel);
}

// Scale a square matrix so its first nonzero entry (row-major) is 1: the
// canonical representative of its class in PGL.
inline RatMatrix pgl_normalize(const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return (1 / m(i, j)) * m;
    throw SingularMatrixError("zero matrix has no PGL class");
}

struct PglPair {
    RatMatrix pgl2;  // normalized 2x2
    RatMatrix pgln;  // normalized (n+1)x(n+1) monomial matrix
};

// The homomorphism G_{-2} -> PGL2 x PGL_{n+1}:
// (M, (lambda_i), sigma) -> ([M], [diag(lambda) A_sigma]), where A_sigma
// sends e_i to e_{sigma(i)}. Well-defined: N_{-2} maps to scalar pairs.
inline PglPair pgl_pair(const GkElement& g) {
    if (g.k != -2) throw WrongLevelError("projective realization is defined at level -2");
    RatMatrix p = g.sigma.matrix();
    for (int i = 0; i <= g.n; ++i)
        for (int j = 0; j <= g.n; ++j) p(i, j) *= g.lambdas[i];
    return PglPair{pgl_normalize(g.m), pgl_normalize(p)};
}

// The 2^n classes (id, (e_0,...,e_n), id) with e_i = +-1 in G_{-2}, modulo
// the global sign (all-minus-one is the identity class since diag(l^2, l^2)
// with l = -1 is the identity matrix). Representatives fix e_0 = +1. Each
// acts trivially on any slice point: the torus weights are squares.
inline std::vector<GkElement> sign_kernel_elements(const SlicePoint& w) {
    if (!in_slice(w)) throw NotInSliceError("sign kernel over a point outside the slice");
    int n = w.n;
    std::vector<GkElement> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Rat> eps(n + 1, Rat(1));
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) eps[i + 1] = -1;
        out.push_back(GkElement(n, -2, RatMatrix::identity(2), std::move(eps), Permutation::id(n + 1)));
    }
    return out;
}

// theta(g . w) is proportional to [M_g] * theta(w): equivariance of the
// product form at level -1 (projective equality in the space of forms).
inline bool product_form_equivariant(const GkElement& g, const SlicePoint& w) {
    if (g.k != -1) throw WrongLevelError("product form equivariance lives at level -1");
    BinaryForm lhs = product_form(act(g, w));
    BinaryForm rhs = moebius_act(g.m, product_form(w));
    return proportional(lhs, rhs);
}

// Frame-bundle equivariance at level -2. Both sides are pairs of diagonal
// matrices in the frame of the embedded pencil:
//   left:  embed(g . w)
//   right: (P^-T (alpha v1 + beta v2) P^-1, P^-T (gamma v1 + delta v2) P^-1)
// with (Mbar, P) = pgl_pair(g), Mbar = [[alpha,beta],[gamma,delta]],
// v1 = diag(a), v2 = diag(b). Equality holds up to one common nonzero scalar
// on the pair (the frame is only defined up to simultaneous scaling).
inline bool frame_equivariant(const GkElement& g, const SlicePoint& w) {
    if (g.k != -2) throw WrongLevelError("frame equivariance lives at level -2");
    QuadricPencil lhs = embed_diagonal(act(g, w));

    PglPair psi = pgl_pair(g);
    int size = g.n + 1;
    RatMatrix v1(size, size), v2(size, size);
    for (int i = 0; i < size; ++i) {
        v1(i, i) = w.a[i];
        v2(i, i) = w.b[i];
    }
    RatMatrix pi = inverse(psi.pgln);
    RatMatrix pit = pi.transpose();
    RatMatrix r1 = pit * (psi.pgl2(0, 0) * v1 + psi.pgl2(0, 1) * v2) * pi;
    RatMatrix r2 = pit * (psi.pgl2(1, 0) * v1 + psi.pgl2(1, 1) * v2) * pi;

    // one common scalar t with lhs = t * rhs on both matrices
    Rat t;
    bool have_t = false;
    for (int i = 0; i < size && !have_t; ++i)
        if (r1(i, i) != 0) {
            t = lhs.q1(i, i) / r1(i, i);
            have_t = true;
        }
    for (int i = 0; i < size && !have_t; ++i)
        if (r2(i, i) != 0) {
            t = lhs.q2(i, i) / r2(i, i);
            have_t = true;
        }
    if (!have_t || t == 0) return false;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            if (lhs.q1(i, j) != t * r1(i, j)) return false;
            if (lhs.q2(i, j) != t * r2(i, j)) return false;
        }
    return true;
}

} // namespace qp
