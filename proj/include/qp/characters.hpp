#pragma once

// Characters of the groups acting on the diagonal slice. A character is a
// triple (ell, a, delta): the power of det on GL2, the common torus exponent,
// and the sign character of S_{n+1}. The characters of G_k are the triples
// with 2 k ell = (n+1) a; as a lattice they are Z + Z/2 via
//   Psi(a, delta) = ((n+1)/d * a, 2k/d * a, delta),   d = gcd(|2k|, n+1).
//
// The kernel of restricting characters to the slice is generated by the
// character of the invariant function prod_{i<j}(a_i b_j - a_j b_i), whose
// triple is (n(n+1)/2, kn, 1).

#include <numeric>
#include <utility>
#include <vector>

#include "qp/group.hpp"

namespace qp {

struct CharacterTriple {
    Int ell;
    Int a;
    int delta; // 0 or 1

    CharacterTriple(Int ell_, Int a_, int delta_) : ell(std::move(ell_)), a(std::move(a_)), delta(delta_) {
        if (delta != 0 && delta != 1) throw BadParamsError("sign character must be 0 or 1");
    }
    bool operator==(const CharacterTriple& o) const { return ell == o.ell && a == o.a && delta == o.delta; }
};

struct CharacterLattice {
    int n;
    long k;
    long d; // gcd(|2k|, n+1), positive
    CharacterTriple basis_free;    // Psi(1, 0)
    CharacterTriple basis_torsion; // Psi(0, 1)

    bool contains(const CharacterTriple& t) const { return 2 * Int(k) * t.ell == Int(n + 1) * t.a; }

    // coordinates (a, delta) with t = Psi(a, delta); t must lie in the lattice
    std::pair<Int, int> coordinates(const CharacterTriple& t) const {
        if (!contains(t)) throw BadParamsError("triple is not a character at this level");
        Int u = Int(n + 1) / d;
        if (t.ell % u != 0) throw BadParamsError("triple is not in the image of Psi");
        return {t.ell / u, t.delta};
    }
};

inline long gcd_pos(long x, long y) { return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y); }

inline CharacterLattice character_lattice(int n, long k) {
    if (n < 3 || k == 0) throw BadParamsError("need n >= 3 and nonzero level");
    long d = gcd_pos(2 * k, n + 1);
    return CharacterLattice{n, k, d, CharacterTriple(Int((n + 1) / d), Int(2 * k / d), 0),
                            CharacterTriple(Int(0), Int(0), 1)};
}

// (n(n+1)/2, kn, 1): the character cut out by the product of the minors.
inline CharacterTriple kernel_character(int n, long k) {
    if (n < 3 || k == 0) throw BadParamsError("need n >= 3 and nonzero level");
    CharacterTriple t(Int(n) * (n + 1) / 2, Int(k) * n, 1);
    if (!character_lattice(n, k).contains(t)) throw Error("internal: kernel character left the lattice");
    return t;
}

// Value of the kernel character on a representative:
// det(M)^(n(n+1)/2) * (prod lambda_i)^(kn) * sgn(sigma).
// Each column scaling enters exactly n of the minors, so this closed form is
// what the invariant function transforms by; verify_kernel_character checks
// it against direct evaluation.
inline Rat kernel_character_value(const GkElement& g, int n, long k) {
    if (g.n != n || g.k != k) throw LevelMismatchError("element does not match the parameters");
    Rat dm = det(g.m);
    Rat prod(1);
    for (const Rat& l : g.lambdas) prod *= l;
    Rat v = pow_rat(dm, static_cast<long>(n) * (n + 1) / 2) * pow_rat(prod, k * static_cast<long>(n));
    if (g.sigma.sign() < 0) v = -v;
    return v;
}

// prod of all minors of w: the invariant function itself.
inline Rat minor_product(const SlicePoint& w) {
    Rat f(1);
    for (int i = 0; i <= w.n; ++i)
        for (int j = i + 1; j <= w.n; ++j) f *= w.minor(i, j);
    return f;
}

} // namespace qp
