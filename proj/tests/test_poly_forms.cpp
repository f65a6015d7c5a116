#include <catch2/catch_amalgamated.hpp>

#include "qp/binary_form.hpp"
#include "qp/poly.hpp"
#include "qp/prng.hpp"

using namespace qp;

namespace {

BinaryForm random_form(Lcg64& rng, int degree) {
    for (;;) {
        std::vector<Rat> c(degree + 1);
        for (auto& v : c) v = Rat(rng.range(-4, 4));
        BinaryForm f{std::move(c)};
        if (!f.is_zero()) return f;
    }
}

RatMatrix random_gl2(Lcg64& rng) {
    for (;;) {
        RatMatrix m{{rng.rat(), rng.rat()}, {rng.rat(), rng.rat()}};
        if (det(m) != 0) return m;
    }
}

} // namespace

TEST_CASE("polynomial division and gcd") {
    Poly f({Rat(-1), Rat(0), Rat(1)}); // x^2 - 1
    Poly g({Rat(-1), Rat(1)});         // x - 1
    auto [q, r] = divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q == Poly({Rat(1), Rat(1)}));
    CHECK(gcd(f, g) == g);
    CHECK(gcd(f, Poly({Rat(1), Rat(1)})) == Poly({Rat(1), Rat(1)}));
}

TEST_CASE("resultants") {
    Poly xm1({Rat(-1), Rat(1)}), xm2({Rat(-2), Rat(1)});
    CHECK(resultant(xm1, xm2) == 1); // difference of the roots
    CHECK(resultant(xm1, xm1) == 0); // shared root
    Poly f({Rat(-1), Rat(0), Rat(1)}), g({Rat(-4), Rat(0), Rat(1)});
    CHECK(resultant(f, g) == 9); // (1-2)(1+2)(-1-2)(-1+2)
}

TEST_CASE("interpolation recovers polynomials") {
    Poly p({Rat(3), Rat(-2), Rat(0), Rat(5)});
    std::vector<std::pair<Rat, Rat>> pts;
    for (int t = 0; t <= 3; ++t) pts.push_back({Rat(t), p.eval(Rat(t))});
    CHECK(lagrange_interpolate(pts) == p);
}

TEST_CASE("squarefree detection on pinned forms") {
    BinaryForm three_roots = BinaryForm::x0() * BinaryForm::x1() * BinaryForm::linear(Rat(1), Rat(1));
    CHECK(is_squarefree(three_roots));

    BinaryForm double_root = BinaryForm::x0() * BinaryForm::x0() * BinaryForm::x1();
    CHECK_FALSE(is_squarefree(double_root));

    // x0^4 + x1^4: partials 4x0^3 and 4x1^3 share no root
    CHECK(is_squarefree(BinaryForm({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)})));

    CHECK_THROWS_AS(is_squarefree(BinaryForm({Rat(0), Rat(0)})), ZeroFormError);

    // repeated root at infinity only
    BinaryForm inf2 = BinaryForm::x1() * BinaryForm::x1() * BinaryForm::linear(Rat(1), Rat(2));
    CHECK_FALSE(is_squarefree(inf2));
}

TEST_CASE("squarefree respects products") {
    Lcg64 rng(23);
    for (int t = 0; t < 200; ++t) {
        BinaryForm f = random_form(rng, static_cast<int>(rng.range(1, 3)));
        BinaryForm g = random_form(rng, static_cast<int>(rng.range(1, 3)));
        bool expected = is_squarefree(f) && is_squarefree(g) && form_resultant(f, g) != 0;
        CHECK(is_squarefree(f * g) == expected);
    }
}

TEST_CASE("moebius substitution on pinned forms") {
    BinaryForm x0 = BinaryForm::x0();
    CHECK(moebius_act(RatMatrix::identity(2), x0) == x0);

    RatMatrix swap{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(moebius_act(swap, x0) == BinaryForm::x1());

    RatMatrix scale{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
    BinaryForm x0x1 = x0 * BinaryForm::x1();
    CHECK(moebius_act(scale, x0x1) == Rat(2) * x0x1);

    CHECK_THROWS_AS(moebius_act(RatMatrix{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, x0), SingularMatrixError);
}

TEST_CASE("moebius composition is the left action law") {
    Lcg64 rng(29);
    for (int t = 0; t < 200; ++t) {
        RatMatrix m1 = random_gl2(rng), m2 = random_gl2(rng);
        BinaryForm f = random_form(rng, static_cast<int>(rng.range(1, 4)));
        CHECK(moebius_act(m1, moebius_act(m2, f)) == moebius_act(m1 * m2, f));
        // degree preserved
        CHECK(moebius_act(m1, f).degree() == f.degree());
    }
}

TEST_CASE("resultant matches the root-product oracle on split polynomials") {
    // for f = lf * prod (x - alpha_i), g = lg * prod (x - beta_j) the value
    // must be lg^deg(f) * prod_j f(beta_j), computed here by direct evaluation
    Lcg64 rng(223);
    for (int t = 0; t < 150; ++t) {
        int m = static_cast<int>(rng.range(1, 4)), n = static_cast<int>(rng.range(1, 4));
        Rat lf = rng.nonzero_rat(), lg = rng.nonzero_rat();
        Poly f = Poly::constant(lf), g = Poly::constant(lg);
        std::vector<Rat> betas;
        for (int i = 0; i < m; ++i) f = f * Poly({-Rat(rng.range(-6, 6)), Rat(1)});
        for (int j = 0; j < n; ++j) {
            Rat beta(rng.range(-6, 6));
            betas.push_back(beta);
            g = g * Poly({-beta, Rat(1)});
        }
        Rat expected = pow_rat(lg, m);
        for (const Rat& beta : betas) expected *= f.eval(beta);
        CHECK(resultant(f, g) == expected);
    }
}

TEST_CASE("evaluation and dehomogenization") {
    // f = x0^2 x1 + 3 x1^3 as a degree-3 form: coeffs (0, 1, 0, 3)
    BinaryForm f({Rat(0), Rat(1), Rat(0), Rat(3)});
    CHECK(f.eval(Rat(2), Rat(1)) == 7);
    CHECK(f.eval(Rat(1), Rat(0)) == 0); // root at infinity, degree drop in x0
    Poly p = f.dehomogenize();
    CHECK(p.degree() == 2);
    CHECK(homogenize(p, 3) == f);
}
