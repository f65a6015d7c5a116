#pragma once

// Picard groups of the quotients [W/G_k], computed structurally: restrict
// characters to the slice, quotient the character lattice Z + Z/2 by the
// kernel character in Psi-coordinates (nd/2, 1), and read the group off the
// Smith normal form of the presentation. The closed forms (Z/dn with
// d = gcd(|2k|, n+1), and the case split over n mod 4 at level -2) are
// asserted against the computed group, not substituted for it.

#include <utility>
#include <vector>

#include "qp/abelian.hpp"
#include "qp/characters.hpp"

namespace qp {

inline AbelianGroup picard_group(int n, long k) {
    if (n < 3 || k == 0) throw BadParamsError("need n >= 3 and nonzero level");
    CharacterLattice lat = character_lattice(n, k);
    long d = lat.d;
    // nd is even: n even is immediate; n odd makes n+1 and 2k both even, so d is
    Int nd = Int(n) * d;
    if (nd % 2 != 0) throw Error("internal: nd odd");
    auto [a0, delta0] = lat.coordinates(kernel_character(n, k));
    if (a0 != nd / 2 || delta0 != 1) throw Error("internal: kernel character has unexpected coordinates");

    // generators (x, y) = (Psi(1,0), Psi(0,1)); relations 2y = 0 and a0 x + y = 0
    IntMatrix rel(2, 2);
    rel(0, 0) = a0;
    rel(0, 1) = 1;
    rel(1, 0) = 0;
    rel(1, 1) = 2;
    AbelianGroup pic = group_from_presentation(rel);

    if (pic != AbelianGroup::cyclic(nd)) throw Error("internal: Picard group is not cyclic of order nd");
    return pic;
}

// Level -2: the moduli of smooth complete intersections of two quadrics.
// Case split on n mod 4, cross-asserted against the lattice computation.
inline AbelianGroup pic_complete_intersections(int n) {
    if (n < 3) throw BadParamsError("need n >= 3");
    AbelianGroup closed;
    if (n % 2 == 0)
        closed = AbelianGroup::cyclic(Int(n));
    else if (n % 4 == 1)
        closed = AbelianGroup::cyclic(Int(2) * n);
    else
        closed = AbelianGroup::cyclic(Int(4) * n);
    if (picard_group(n, -2) != closed) throw Error("internal: level -2 case split mismatch");
    return closed;
}

// Level -1: the moduli of degree-(n+1) binary forms with distinct roots.
inline AbelianGroup pic_binary_forms(int n) {
    if (n < 3) throw BadParamsError("need n >= 3");
    AbelianGroup closed = AbelianGroup::cyclic(Int(n % 2 == 0 ? n : 2 * n));
    if (picard_group(n, -1) != closed) throw Error("internal: level -1 case split mismatch");
    return closed;
}

struct CyclicMap {
    Int source_order;
    Int target_order;
    Int multiplier; // 1 -> multiplier

    CyclicMap(Int s, Int t, Int m)
        : source_order(std::move(s)), target_order(std::move(t)), multiplier(std::move(m)) {
        if (source_order < 1 || target_order < 1) throw BadParamsError("cyclic orders must be positive");
        if ((multiplier * source_order) % target_order != 0)
            throw BadParamsError("multiplier does not define a homomorphism");
    }

    Int image_order() const { // order of multiplier in Z/target
        Int g;
        mpz_gcd(g.get_mpz_t(), target_order.get_mpz_t(), multiplier.get_mpz_t());
        return target_order / g;
    }
    bool injective() const { return image_order() == source_order; }
    Int apply(const Int& x) const { return ((multiplier * x) % target_order + target_order) % target_order; }
};

// Pic([W/G_c]) -> Pic([W/G_b]) for c | b: multiplication by d_b/d_c from
// Z/(d_c n) to Z/(d_b n). Injective (the image of 1 has order d_c n).
inline CyclicMap pullback_map(int n, long c, long b) {
    if (c == 0 || b == 0 || b % c != 0) throw NotDivisorError("pullback needs c | b, both nonzero");
    long dc = gcd_pos(2 * c, n + 1);
    long db = gcd_pos(2 * b, n + 1);
    if (db % dc != 0) throw Error("internal: d_c does not divide d_b");
    CyclicMap map(Int(dc) * n, Int(db) * n, Int(db / dc));
    if (!map.injective()) throw Error("internal: pullback map failed the injectivity check");
    return map;
}

} // namespace qp
