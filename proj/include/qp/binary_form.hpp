#pragma once

// Binary forms: degree-d homogeneous polynomials in x0, x1, stored as the
// coefficient sequence c_0..c_d of sum_j c_j x0^(d-j) x1^j (descending x0
// powers). The degree is part of the datum; c_0 = 0 means the form vanishes
// at [1:0], it does not lower the degree.

#include <utility>
#include <vector>

#include "qp/poly.hpp"

namespace qp {

class BinaryForm {
  public:
    BinaryForm() : c_(1, Rat(0)) {} // zero form of degree 0
    explicit BinaryForm(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw BadParamsError("binary form needs at least one coefficient");
    }
    static BinaryForm constant(const Rat& v) { return BinaryForm({v}); }
    static BinaryForm x0() { return BinaryForm({Rat(1), Rat(0)}); }
    static BinaryForm x1() { return BinaryForm({Rat(0), Rat(1)}); }
    // a*x0 + b*x1
    static BinaryForm linear(const Rat& a, const Rat& b) { return BinaryForm({a, b}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int j) const { return c_[j]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rat& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
    bool operator!=(const BinaryForm& o) const { return !(*this == o); }

    Rat eval(const Rat& v0, const Rat& v1) const {
        int d = degree();
        std::vector<Rat> p0(d + 1);
        p0[0] = 1;
        for (int j = 1; j <= d; ++j) p0[j] = p0[j - 1] * v0;
        Rat r(0), p1(1);
        for (int j = 0; j <= d; ++j) {
            if (c_[j] != 0) r += c_[j] * p0[d - j] * p1;
            p1 *= v1;
        }
        return r;
    }

    BinaryForm operator*(const BinaryForm& o) const {
        std::vector<Rat> p(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
        }
        return BinaryForm(std::move(p));
    }

    friend BinaryForm operator*(const Rat& k, const BinaryForm& f) {
        BinaryForm g = f;
        for (auto& v : g.c_) v *= k;
        return g;
    }

    BinaryForm partial_x0() const {
        int d = degree();
        if (d == 0) return BinaryForm({Rat(0)});
        std::vector<Rat> p(d, Rat(0));
        for (int j = 0; j < d; ++j) p[j] = Rat(d - j) * c_[j];
        return BinaryForm(std::move(p));
    }
    BinaryForm partial_x1() const {
        int d = degree();
        if (d == 0) return BinaryForm({Rat(0)});
        std::vector<Rat> p(d, Rat(0));
        for (int j = 0; j < d; ++j) p[j] = Rat(j + 1) * c_[j + 1];
        return BinaryForm(std::move(p));
    }

    // f(x0, 1) as a univariate polynomial in x0.
    Poly dehomogenize() const {
        std::vector<Rat> asc(c_.size());
        for (size_t j = 0; j < c_.size(); ++j) asc[degree() - j] = c_[j];
        return Poly(std::move(asc));
    }

  private:
    std::vector<Rat> c_;
};

// Homogenize a univariate polynomial to a form of the given degree
// (multiplying by the appropriate power of x1; d >= deg p required).
inline BinaryForm homogenize(const Poly& p, int d) {
    if (p.is_zero()) return BinaryForm(std::vector<Rat>(d + 1, Rat(0)));
    if (d < p.degree()) throw BadParamsError("homogenization degree too small");
    std::vector<Rat> c(d + 1, Rat(0));
    for (int k = 0; k <= p.degree(); ++k) c[d - k] = p[k];
    return BinaryForm(std::move(c));
}

// Resultant of two binary forms of their declared degrees; leading zero
// coefficients participate, so common roots at [1:0] are detected too.
// Zero iff the forms share a projective root over the algebraic closure.
inline Rat form_resultant(const BinaryForm& f, const BinaryForm& g) {
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rat(1); // no roots to share
    if (m == 0) return pow_rat(f[0], n);
    if (n == 0) return pow_rat(g[0], m);
    int size = m + n;
    RatMatrix s(size, size);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(i, i + j) = g[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(m + i, i + j) = f[j];
    return det(s);
}

// No repeated projective root over the algebraic closure. Via the resultant
// of the two partial derivatives, which covers the root at infinity without
// dehomogenizing. Char 0: Euler's identity d*f = x0*f_x0 + x1*f_x1 makes a
// common root of the partials a root of f itself.
inline bool is_squarefree(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError("squarefree test on the zero form");
    if (f.degree() <= 1) return true;
    return form_resultant(f.partial_x0(), f.partial_x1()) != 0;
}

// [M] * f := f(a x0 + c x1, b x0 + d x1) for M = [[a,b],[c,d]].
// Composition law (asserted in the tests): M * (N * f) = (M N) * f.
inline BinaryForm moebius_act(const RatMatrix& m, const BinaryForm& f) {
    if (m.rows() != 2 || m.cols() != 2) throw SizeMismatchError("moebius matrix must be 2x2");
    if (det(m) == 0) throw SingularMatrixError("moebius matrix is singular");
    int d = f.degree();
    BinaryForm u = BinaryForm::linear(m(0, 0), m(1, 0)); // a x0 + c x1
    BinaryForm v = BinaryForm::linear(m(0, 1), m(1, 1)); // b x0 + d x1
    // power tables u^i, v^i for i = 0..d
    std::vector<BinaryForm> up(d + 1, BinaryForm::constant(Rat(1))), vp(d + 1, BinaryForm::constant(Rat(1)));
    for (int i = 1; i <= d; ++i) {
        up[i] = up[i - 1] * u;
        vp[i] = vp[i - 1] * v;
    }
    std::vector<Rat> out(d + 1, Rat(0));
    for (int j = 0; j <= d; ++j) {
        if (f[j] == 0) continue;
        BinaryForm term = up[d - j] * vp[j];
        for (int t = 0; t <= d; ++t) out[t] += f[j] * term[t];
    }
    return BinaryForm(std::move(out));
}

// f = t * g for a single nonzero rational t (projective equality in the space
// of forms). Zero forms are proportional only to zero forms.
inline bool proportional(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    int pivot = -1;
    for (int j = 0; j <= g.degree(); ++j)
        if (g[j] != 0) {
            pivot = j;
            break;
        }
    if (f[pivot] == 0) return false;
    Rat t = f[pivot] / g[pivot];
    for (int j = 0; j <= g.degree(); ++j)
        if (f[j] != t * g[j]) return false;
    return true;
}

} // namespace qp
