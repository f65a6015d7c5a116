#pragma once

// Simultaneous diagonalization of a smooth pencil over Q. Pick a nonsingular
// member M of the pencil, compute the rational eigenvalues of M^-1 N for a
// complementary member N, and use the eigenvectors as the congruence basis:
// eigenvectors for distinct eigenvalues of an M-self-adjoint operator are
// M-orthogonal, so B^T Q B is diagonal for every member Q. Succeeds exactly
// when the discriminant form splits into rational linear factors; otherwise
// reports the irreducible non-linear factors (diagonalizing over extension
// fields is out of scope).

#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

#include "qp/factor.hpp"
#include "qp/pencil.hpp"
#include "qp/slice.hpp"

namespace qp {

struct DiagonalizeSuccess {
    RatMatrix basis; // B with B^T Q1 B, B^T Q2 B diagonal
    SlicePoint point;
};

struct Obstruction {
    std::vector<BinaryForm> irreducible_factors; // non-linear factors of the discriminant form
};

using DiagonalizeResult = std::variant<DiagonalizeSuccess, Obstruction>;

inline DiagonalizeResult simultaneous_diagonalize(const QuadricPencil& p) {
    if (!is_smooth(p)) throw NotSmoothError("only smooth pencils diagonalize simultaneously");
    int size = p.n + 1;

    // nonsingular member: the discriminant form has at most n+1 roots, so one
    // of (1,0), (0,1), (1,1), ..., (1,n) hits a nonsingular member
    RatMatrix member(size, size);
    bool member_is_q1_line = false; // member = q1 + j*q2 for some j >= 0
    bool found = false;
    {
        std::vector<std::pair<Rat, Rat>> tries;
        tries.push_back({Rat(1), Rat(0)});
        tries.push_back({Rat(0), Rat(1)});
        for (int j = 1; j <= p.n; ++j) tries.push_back({Rat(1), Rat(j)});
        for (const auto& [al, be] : tries) {
            RatMatrix cand = al * p.q1 + be * p.q2;
            if (det(cand) != 0) {
                member = cand;
                member_is_q1_line = !(al == 1 && be == 0);
                found = true;
                break;
            }
        }
    }
    if (!found) throw Error("internal: smooth pencil with no nonsingular listed member");
    const RatMatrix& other = member_is_q1_line ? p.q1 : p.q2;

    RatMatrix op = inverse(member) * other;

    // characteristic polynomial det(tI - op) by interpolation
    std::vector<std::pair<Rat, Rat>> samples;
    for (int t = 0; t <= size; ++t) {
        RatMatrix m = Rat(t) * RatMatrix::identity(size) - op;
        samples.push_back({Rat(t), det(m)});
    }
    Poly chi = lagrange_interpolate(samples);

    PolyFactorization pf = factor_poly(chi);
    std::vector<Rat> eigenvalues;
    bool split = true;
    for (const auto& [factor, mult] : pf.factors) {
        if (factor.degree() == 1) {
            for (int c = 0; c < mult; ++c) eigenvalues.push_back(-factor[0]); // monic x + c0
        } else {
            split = false;
        }
    }
    if (!split) {
        FormFactorization ff = factor_form(discriminant_form(p));
        Obstruction obs;
        for (const auto& [form, mult] : ff.factors)
            if (form.degree() >= 2) obs.irreducible_factors.push_back(form);
        return obs;
    }
    std::sort(eigenvalues.begin(), eigenvalues.end());

    RatMatrix basis(size, size);
    for (int j = 0; j < size; ++j) {
        RatMatrix shifted = op - eigenvalues[j] * RatMatrix::identity(size);
        std::vector<Rat> v = kernel_vector(shifted);
        for (int i = 0; i < size; ++i) basis(i, j) = v[i];
    }

    RatMatrix d1 = congruence(basis, p.q1), d2 = congruence(basis, p.q2);
    if (!d1.is_diagonal() || !d2.is_diagonal()) throw Error("internal: congruence result not diagonal");
    std::vector<Rat> a(size), b(size);
    for (int i = 0; i < size; ++i) {
        a[i] = d1(i, i);
        b[i] = d2(i, i);
    }
    SlicePoint w(p.n, std::move(a), std::move(b));
    if (!in_slice(w)) throw Error("internal: diagonalized smooth pencil left the slice");
    return DiagonalizeSuccess{std::move(basis), std::move(w)};
}

} // namespace qp
