#include <catch2/catch_amalgamated.hpp>

#include "qp/hyperelliptic.hpp"
#include "qp/prng.hpp"

using namespace qp;

namespace {

SlicePoint w5() {
    std::vector<Rat> a(6, Rat(1)), b(6);
    for (int i = 0; i < 6; ++i) b[i] = Rat(i);
    return SlicePoint(5, std::move(a), std::move(b));
}

} // namespace

TEST_CASE("the associated curve of a smooth odd-dimensional pencil") {
    QuadricPencil p = embed_diagonal(w5());
    HyperellipticModel m = associated_curve(p);
    CHECK(m.g == 2);
    BinaryForm expected = BinaryForm::constant(Rat(1));
    for (int i = 0; i < 6; ++i) expected = expected * BinaryForm::linear(Rat(1), Rat(i));
    CHECK(m.f == expected);
    CHECK_FALSE(m.genus_one_passthrough());

    // n = 3 passes through with the genus-1 flag
    SlicePoint w3(3, {Rat(1), Rat(1), Rat(1), Rat(1)}, {Rat(0), Rat(1), Rat(2), Rat(3)});
    CHECK(associated_curve(embed_diagonal(w3)).genus_one_passthrough());

    // even n is rejected
    Lcg64 rng(97);
    SlicePoint w4 = random_slice_point(rng, 4);
    CHECK_THROWS_AS(associated_curve(embed_diagonal(w4)), EvenNError);

    // non-smooth pencils are rejected
    RatMatrix d1(6, 6), d2(6, 6);
    for (int i = 0; i < 6; ++i) d1(i, i) = 1;
    for (int i = 0; i < 6; ++i) d2(i, i) = (i < 2) ? Rat(1) : Rat(i);
    CHECK_THROWS_AS(associated_curve(QuadricPencil(5, d1, d2)), NotSmoothError);
}

TEST_CASE("curve membership") {
    HyperellipticModel m = associated_curve(embed_diagonal(w5()));
    // Weierstrass point: root of F with y = 0; the root of (x + 3z) is (-3, 1)
    CHECK(curve_contains(m, WeightedPoint(Rat(-3), Rat(1), Rat(0))));
    // x = 1, z = 0: y^2 must equal the leading coefficient, here 1
    CHECK(curve_contains(m, WeightedPoint(Rat(1), Rat(0), Rat(1))));
    CHECK(curve_contains(m, WeightedPoint(Rat(1), Rat(0), Rat(-1))));
    CHECK_FALSE(curve_contains(m, WeightedPoint(Rat(1), Rat(1), Rat(7))));
}

TEST_CASE("weighted point equivalence") {
    // (x, z, y) ~ (tx, tz, t^{g+1} y) with g = 2
    WeightedPoint p(Rat(1), Rat(2), Rat(5));
    WeightedPoint q(Rat(3), Rat(6), Rat(135)); // t = 3, t^3 = 27
    CHECK(weighted_equal(p, q, 2));
    CHECK_FALSE(weighted_equal(p, WeightedPoint(Rat(3), Rat(6), Rat(45)), 2));
    CHECK_THROWS_AS(WeightedPoint(Rat(0), Rat(0), Rat(1)), BadParamsError);
}

TEST_CASE("gamma action preserves curve membership") {
    Lcg64 rng(101);
    auto [w, pt] = random_curve_point(rng, 5);
    QuadricPencil p = embed_diagonal(w);

    // identity leaves everything unchanged
    GammaElement id(RatMatrix::identity(2), RatMatrix::identity(6));
    auto [p_id, pt_id] = gamma_act(id, p, pt);
    CHECK(p_id.q1 == p.q1);
    CHECK(weighted_equal(pt_id, pt, 2));

    // (Id, A): the form picks up det(A)^-2 and y scales by det(A)^-1
    GammaElement ga(RatMatrix::identity(2), Rat(2) * random_unimodular(rng, 6));
    auto [p_a, pt_a] = gamma_act(ga, p, pt);
    Rat da = det(ga.a);
    CHECK((da * da) * discriminant_form(p_a) == discriminant_form(p));
    CHECK(pt_a.y * da == pt.y);
    CHECK(curve_contains(associated_curve(p_a), pt_a));

    // the class representative (diag(l^2, l^2), diag(l, ..., l)) is a no-op
    Rat l = make_rat(3, 2);
    RatMatrix m2{{l * l, Rat(0)}, {Rat(0), l * l}};
    RatMatrix an = l * RatMatrix::identity(6);
    auto [p_c, pt_c] = gamma_act(GammaElement(m2, an), p, pt);
    CHECK(p_c.q1 == p.q1);
    CHECK(p_c.q2 == p.q2);
    CHECK(weighted_equal(pt_c, pt, 2));

    // full identity on random elements: transformed point on transformed curve,
    // and the discriminant transforms by det(A)^2 against the substitution
    for (int t = 0; t < 30; ++t) {
        auto [w2, pt2] = random_curve_point(rng, 5);
        QuadricPencil p2 = embed_diagonal(w2);
        GammaElement g = random_gamma_element(rng, 5);
        auto [np, npt] = gamma_act(g, p2, pt2);
        CHECK(curve_contains(associated_curve(np), npt));
        Rat d = det(g.a);
        CHECK(moebius_act(g.m, discriminant_form(p2)) == (d * d) * discriminant_form(np));
    }

    CHECK_THROWS_AS(gamma_act(id, p, WeightedPoint(Rat(1), Rat(1), Rat(12345))), NotOnCurveError);
}

TEST_CASE("gamma class equality") {
    Lcg64 rng(103);
    GammaElement g = random_gamma_element(rng, 5);
    Rat l = make_rat(-2, 5);
    GammaElement scaled(l * l * g.m, l * g.a);
    CHECK(equal_in_gamma(g, scaled));
    CHECK_FALSE(equal_in_gamma(g, GammaElement(Rat(2) * g.m, g.a)));
}

TEST_CASE("weierstrass divisor splits completely") {
    // (prod (x + iz) for i = 0..5) has six rational points
    HyperellipticModel m = associated_curve(embed_diagonal(w5()));
    WeierstrassDivisor d = weierstrass_divisor(m);
    CHECK(d.rational_points.size() == 6);
    CHECK(d.irreducible_factors.empty());
    for (int i = 0; i < 6; ++i) {
        bool found = false;
        for (const auto& pt : d.rational_points) found = found || pt == ProjectiveLinePoint::affine(Rat(-i));
        CHECK(found);
    }

    // (x^2 - 2 z^2) x z (x + z)(x - z): 4 rational points and one quadratic factor
    BinaryForm f = BinaryForm({Rat(1), Rat(0), Rat(-2)}) * BinaryForm::x0() * BinaryForm::x1() *
                   BinaryForm::linear(Rat(1), Rat(1)) * BinaryForm::linear(Rat(1), Rat(-1));
    WeierstrassDivisor d2 = weierstrass_divisor(HyperellipticModel(2, f));
    CHECK(d2.rational_points.size() == 4);
    REQUIRE(d2.irreducible_factors.size() == 1);
    CHECK(d2.irreducible_factors[0].degree() == 2);

    // degree bookkeeping
    int total = static_cast<int>(d2.rational_points.size());
    for (const auto& irr : d2.irreducible_factors) total += irr.degree();
    CHECK(total == 2 * 2 + 2);
}

TEST_CASE("picard group of the hyperelliptic moduli") {
    CHECK(pic_hyperelliptic(2) == AbelianGroup::cyclic(Int(10)));
    CHECK(pic_hyperelliptic(3) == AbelianGroup::cyclic(Int(28)));
    CHECK(pic_hyperelliptic(5) == AbelianGroup::cyclic(Int(44)));
    CHECK_THROWS_AS(pic_hyperelliptic(1), BadGenusError);

    for (int g = 2; g <= 10; ++g) {
        CHECK(pic_hyperelliptic(g).order() == pic_complete_intersections(2 * g + 1).order());
        CHECK(verify_pic_triangle(g));
    }
}
