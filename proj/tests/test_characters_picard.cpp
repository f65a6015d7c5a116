#include <catch2/catch_amalgamated.hpp>

#include "qp/picard.hpp"
#include "qp/prng.hpp"
#include "qp/verify.hpp"

using namespace qp;

TEST_CASE("character lattices") {
    CharacterLattice l32 = character_lattice(3, -2);
    CHECK(l32.d == 4);
    CHECK(l32.basis_free == CharacterTriple(Int(1), Int(-1), 0));
    CHECK(l32.basis_torsion == CharacterTriple(Int(0), Int(0), 1));

    CharacterLattice l41 = character_lattice(4, -1);
    CHECK(l41.d == 1);
    CHECK(l41.basis_free == CharacterTriple(Int(5), Int(-2), 0));

    // membership: 2(-2)(6) = 4(-6)
    CHECK(l32.contains(CharacterTriple(Int(6), Int(-6), 1)));
    CHECK_FALSE(l32.contains(CharacterTriple(Int(1), Int(1), 0)));
    CHECK_THROWS_AS(character_lattice(2, -1), BadParamsError);
    CHECK_THROWS_AS(character_lattice(3, 0), BadParamsError);
}

TEST_CASE("kernel character closed form") {
    CHECK(kernel_character(3, -2) == CharacterTriple(Int(6), Int(-6), 1));
    CHECK(kernel_character(4, -1) == CharacterTriple(Int(10), Int(-4), 1));
    CHECK(kernel_character(5, 3) == CharacterTriple(Int(15), Int(15), 1));
    for (int n = 3; n <= 10; ++n)
        for (long k : {-3L, -2L, -1L, 1L, 2L})
            CHECK(character_lattice(n, k).contains(kernel_character(n, k)));
}

TEST_CASE("kernel character values on generators") {
    CHECK(kernel_character_value(GkElement::identity(3, -2), 3, -2) == 1);

    // (id, (l,...,l), sigma): l^{kn(n+1)} sgn(sigma) with kn(n+1) = -24
    Rat l = make_rat(2, 3);
    Permutation swap01({1, 0, 2, 3});
    GkElement g(3, -2, RatMatrix::identity(2), std::vector<Rat>(4, l), swap01);
    CHECK(kernel_character_value(g, 3, -2) == -pow_rat(l, -24));

    // (M, 1, id): det(M)^6 for n = 3
    Lcg64 rng(89);
    RatMatrix m = random_invertible_2x2(rng);
    GkElement gm(3, -2, m, std::vector<Rat>(4, Rat(1)), Permutation::id(4));
    CHECK(kernel_character_value(gm, 3, -2) == pow_rat(det(m), 6));

    // central elements evaluate to 1: the exponents cancel exactly
    for (long k : {-2L, -1L, 3L}) {
        GkElement c = GkElement::central(4, k, make_rat(5, 2));
        CHECK(kernel_character_value(c, 4, k) == 1);
    }
}

TEST_CASE("kernel character suite verifies the closed form against evaluation") {
    for (int n : {3, 5}) {
        for (long k : {-2L, -1L}) {
            SuiteReport rep = kernel_character_suite(n, k, 100, 42);
            INFO(rep.counterexample.dump());
            CHECK(rep.checks_failed == 0);
            CHECK(verify_kernel_character(n, k, 50, 7));
        }
    }
}

TEST_CASE("picard groups from the lattice presentation") {
    CHECK(picard_group(3, -2) == AbelianGroup::cyclic(Int(12)));
    CHECK(picard_group(4, -2) == AbelianGroup::cyclic(Int(4)));
    CHECK(picard_group(5, -1) == AbelianGroup::cyclic(Int(10)));
    CHECK_THROWS_AS(picard_group(3, 0), BadParamsError);
}

TEST_CASE("closed forms for the two moduli levels") {
    CHECK(pic_complete_intersections(4) == AbelianGroup::cyclic(Int(4)));
    CHECK(pic_complete_intersections(5) == AbelianGroup::cyclic(Int(10)));
    CHECK(pic_complete_intersections(7) == AbelianGroup::cyclic(Int(28)));
    CHECK(pic_binary_forms(4) == AbelianGroup::cyclic(Int(4)));
    CHECK(pic_binary_forms(5) == AbelianGroup::cyclic(Int(10)));
    CHECK(pic_binary_forms(6) == AbelianGroup::cyclic(Int(6)));

    for (int n = 3; n <= 64; ++n) {
        CHECK(pic_complete_intersections(n) == picard_group(n, -2));
        CHECK(pic_binary_forms(n) == picard_group(n, -1));
    }
}

TEST_CASE("order sweep for general levels") {
    for (int n = 3; n <= 64; ++n) {
        for (long k = 1; k <= 6; ++k) {
            for (long s : {k, -k}) {
                AbelianGroup pic = picard_group(n, s);
                CHECK(pic.is_cyclic());
                CHECK(pic.order() == Int(gcd_pos(2 * s, n + 1)) * n);
            }
        }
    }
}

TEST_CASE("pullback maps between levels") {
    CyclicMap m = pullback_map(3, -1, -2);
    CHECK(m.source_order == 6);
    CHECK(m.target_order == 12);
    CHECK(m.multiplier == 2);
    CHECK(m.injective());

    CyclicMap m4 = pullback_map(4, -1, -2);
    CHECK(m4.source_order == 4);
    CHECK(m4.target_order == 4);
    CHECK(m4.multiplier == 1);

    CyclicMap same = pullback_map(5, -2, -2);
    CHECK(same.multiplier == 1);

    CHECK_THROWS_AS(pullback_map(4, -2, -1), NotDivisorError);

    // functoriality along -1 | -2 | -4
    for (int n = 3; n <= 20; ++n) {
        CyclicMap ab = pullback_map(n, -1, -2);
        CyclicMap bc = pullback_map(n, -2, -4);
        CyclicMap ac = pullback_map(n, -1, -4);
        CHECK((bc.multiplier * ab.multiplier - ac.multiplier) % ac.target_order == 0);
        CHECK(ab.injective());
        CHECK(bc.injective());
        CHECK(ac.injective());
    }
}

TEST_CASE("nd stays even across the sweep") {
    for (int n = 3; n <= 40; ++n)
        for (long k = 1; k <= 6; ++k)
            for (long s : {k, -k}) CHECK((Int(gcd_pos(2 * s, n + 1)) * n) % 2 == 0);
}
