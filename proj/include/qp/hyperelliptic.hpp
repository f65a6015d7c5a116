#pragma once

// The hyperelliptic curve attached to a smooth pencil in odd projective
// dimension n = 2g+1: y^2 = F(x, z) with F the discriminant form, a curve in
// the weighted projective space P(1, 1, g+1). The group GL2 x GL_{n+1} acts
// (modulo the one-parameter subgroup (diag(l^2, l^2), diag(l,...,l))) on
// pencils and curve points compatibly, and the induced comparison of Picard
// groups with the moduli of genus-g hyperelliptic curves is executed on
// finite cyclic groups.

#include <numeric>
#include <utility>
#include <vector>

#include "qp/factor.hpp"
#include "qp/pencil.hpp"
#include "qp/picard.hpp"
#include "qp/projective.hpp"

namespace qp {

struct HyperellipticModel {
    int g;        // genus; g = 1 is admitted as the classical n = 3 passthrough
    BinaryForm f; // squarefree of degree 2g+2

    HyperellipticModel(int g_, BinaryForm f_) : g(g_), f(std::move(f_)) {
        if (g < 1) throw BadGenusError("genus must be at least 1");
        if (f.degree() != 2 * g + 2) throw BadParamsError("branch form degree must be 2g+2");
        if (!is_squarefree(f)) throw BadParamsError("branch form must be squarefree");
    }

    bool genus_one_passthrough() const { return g == 1; }
};

// Point of P(1, 1, g+1) with (x, z) != (0, 0); equivalence
// (x, z, y) ~ (t x, t z, t^(g+1) y).
struct WeightedPoint {
    Rat x, z, y;

    WeightedPoint(Rat x_, Rat z_, Rat y_) : x(std::move(x_)), z(std::move(z_)), y(std::move(y_)) {
        if (x == 0 && z == 0) throw BadParamsError("(x, z) = (0, 0) is excluded");
    }
};

inline WeightedPoint weighted_normalize(const WeightedPoint& p, int g) {
    Rat t = (p.z != 0) ? p.z : p.x; // scale that coordinate to 1
    return WeightedPoint(p.x / t, p.z / t, p.y / pow_rat(t, g + 1));
}

inline bool weighted_equal(const WeightedPoint& p, const WeightedPoint& q, int g) {
    WeightedPoint a = weighted_normalize(p, g), b = weighted_normalize(q, g);
    return a.x == b.x && a.z == b.z && a.y == b.y;
}

// y^2 = F(x, z) on the stored representative; both sides scale by t^(2g+2).
inline bool curve_contains(const HyperellipticModel& model, const WeightedPoint& pt) {
    return pt.y * pt.y == model.f.eval(pt.x, pt.z);
}

inline HyperellipticModel associated_curve(const QuadricPencil& p) {
    if (p.n % 2 == 0) throw EvenNError("hyperelliptic association needs odd n");
    if (!is_smooth(p)) throw NotSmoothError("hyperelliptic association needs a smooth pencil");
    return HyperellipticModel((p.n - 1) / 2, discriminant_form(p));
}

// Class of (M, A) in (GL2 x GL_{n+1}) / <(diag(l^2, l^2), diag(l, ..., l))>.
struct GammaElement {
    RatMatrix m; // 2x2 invertible
    RatMatrix a; // (n+1)x(n+1) invertible

    GammaElement(RatMatrix m_, RatMatrix a_) : m(std::move(m_)), a(std::move(a_)) {
        if (m.rows() != 2 || m.cols() != 2) throw SizeMismatchError("GL2 component must be 2x2");
        if (a.rows() != a.cols()) throw SizeMismatchError("GL_{n+1} component must be square");
        if (det(m) == 0 || det(a) == 0) throw SingularMatrixError("Gamma components must be invertible");
    }
};

// same class: (M2, A2) = (l^2 M1, l A1) for one nonzero rational l
inline bool equal_in_gamma(const GammaElement& g, const GammaElement& h) {
    if (g.a.rows() != h.a.rows()) return false;
    Rat l;
    bool have = false;
    for (int i = 0; i < g.a.rows() && !have; ++i)
        for (int j = 0; j < g.a.cols() && !have; ++j)
            if (g.a(i, j) != 0) {
                l = h.a(i, j) / g.a(i, j);
                have = true;
            }
    if (!have || l == 0) return false;
    if (h.a != l * g.a) return false;
    return h.m == (l * l) * g.m;
}

// The action on (pencil, curve point):
//   (M, A) * (Q1, Q2) = (A^-T (a Q1 + b Q2) A^-1, A^-T (c Q1 + d Q2) A^-1)
//   (M, A) * (x, z, y) = (M^-T (x, z)^T, y / det A)
// The transformed point lies on the curve of the transformed pencil:
// det of the new member picks up det(A)^-2 against the Mobius-substituted
// discriminant form.
inline std::pair<QuadricPencil, WeightedPoint> gamma_act(const GammaElement& gamma, const QuadricPencil& p,
                                                         const WeightedPoint& pt) {
    if (gamma.a.rows() != p.n + 1) throw SizeMismatchError("Gamma element does not match the pencil");
    HyperellipticModel model = associated_curve(p);
    if (!curve_contains(model, pt)) throw NotOnCurveError("point is not on the associated curve");

    RatMatrix ai = inverse(gamma.a);
    RatMatrix ait = ai.transpose();
    const Rat& a = gamma.m(0, 0);
    const Rat& b = gamma.m(0, 1);
    const Rat& c = gamma.m(1, 0);
    const Rat& d = gamma.m(1, 1);
    QuadricPencil np(p.n, ait * (a * p.q1 + b * p.q2) * ai, ait * (c * p.q1 + d * p.q2) * ai);

    RatMatrix mit = inverse(gamma.m).transpose();
    Rat nx = mit(0, 0) * pt.x + mit(0, 1) * pt.z;
    Rat nz = mit(1, 0) * pt.x + mit(1, 1) * pt.z;
    Rat ny = pt.y / det(gamma.a);
    WeightedPoint npt(std::move(nx), std::move(nz), std::move(ny));

    if (!curve_contains(associated_curve(np), npt))
        throw Error("internal: transformed point left the transformed curve");
    return {std::move(np), std::move(npt)};
}

struct WeierstrassDivisor {
    std::vector<ProjectiveLinePoint> rational_points; // simple roots of F
    std::vector<BinaryForm> irreducible_factors;      // degree >= 2, squarefree, pairwise coprime
};

// Complete splitting of the branch form over Q. Total degree 2g+2, all
// multiplicities 1 (F is squarefree).
inline WeierstrassDivisor weierstrass_divisor(const HyperellipticModel& model) {
    WeierstrassDivisor out;
    FormFactorization ff = factor_form(model.f);
    for (const auto& [form, mult] : ff.factors) {
        if (mult != 1) throw Error("internal: squarefree form with a repeated factor");
        if (form.degree() == 1)
            out.rational_points.emplace_back(-form[1], form[0]); // root of a x0 + b x1 is [-b : a]
        else
            out.irreducible_factors.push_back(form);
    }
    return out;
}

// Pic of the moduli of genus-g hyperelliptic curves, derived from the moduli
// of binary forms: the comparison map from the forms side is an isomorphism
// for even g and multiplication by 2 (index-2 image) for odd g.
inline AbelianGroup pic_hyperelliptic(int g) {
    if (g < 2) throw BadGenusError("hyperelliptic moduli comparison needs g >= 2");
    int n = 2 * g + 1;
    AbelianGroup forms = pic_binary_forms(n); // cyclic of order 2n
    if (g % 2 == 0) return forms;
    return AbelianGroup::cyclic(Int(2) * forms.order());
}

// Executes the finite order argument for the comparison triangle
//   forms -> hyperelliptic -> complete intersections:
// alpha (forms -> hyperelliptic) and beta (forms -> complete intersections,
// the level pullback) are both multiplication by the same factor (1 for even
// g, 2 for odd g); any h closing the triangle must be surjective, hence
// bijective between groups of equal order.
inline bool verify_pic_triangle(int g) {
    if (g < 2) throw BadGenusError("triangle verification needs g >= 2");
    int n = 2 * g + 1;
    AbelianGroup ci = pic_complete_intersections(n);
    AbelianGroup hyp = pic_hyperelliptic(g);
    AbelianGroup forms = pic_binary_forms(n);
    if (hyp.order() != ci.order()) return false;

    Int alpha_mult = (g % 2 == 0) ? Int(1) : Int(2);
    CyclicMap beta = pullback_map(n, -1, -2);
    if (beta.multiplier != alpha_mult) return false;
    if (beta.source_order != forms.order() || beta.target_order != ci.order()) return false;

    CyclicMap alpha(forms.order(), hyp.order(), alpha_mult);
    if (!alpha.injective()) return false;

    if (g % 2 == 1) {
        // if im(h) were proper it would have order 2n with kernel <2n>, but
        // h(2n) = h(alpha(n)) = beta(n) must be 2n != 0 in Z/4n
        Int two_n = Int(2) * n;
        if (alpha.apply(Int(n)) != two_n) return false;
        if (beta.apply(Int(n)) == 0) return false;
    }
    // h exists on generators: solve u * alpha(1) = beta(1) in Z/|ci| with u a unit
    long target = ci.order().get_si();
    long am = alpha.apply(Int(1)).get_si(), bm = beta.apply(Int(1)).get_si();
    for (long u = 1; u < target; ++u)
        if (std::gcd(u, target) == 1 && (u * am - bm) % target == 0) return true;
    return false;
}

} // namespace qp
