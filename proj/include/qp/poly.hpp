#pragma once

// Univariate polynomials with rational coefficients, dense, ascending order.

#include <utility>
#include <vector>

#include "qp/matrix.hpp"

namespace qp {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
    static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }
    static Poly monomial(const Rat& coeff, int deg) {
        std::vector<Rat> c(deg + 1, Rat(0));
        c[deg] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](int i) const {
        static const Rat zero(0);
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
    }
    const Rat& leading() const {
        if (is_zero()) throw BadParamsError("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> s(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
        return Poly(std::move(s));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Rat> s(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) s[i] -= o.c_[i];
        return Poly(std::move(s));
    }
    Poly operator-() const {
        Poly p = *this;
        for (auto& v : p.c_) v = -v;
        return p;
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> s(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) s[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(s));
    }
    friend Poly operator*(const Rat& k, const Poly& p) {
        Poly s = p;
        for (auto& v : s.c_) v *= k;
        s.trim();
        return s;
    }

    Rat eval(const Rat& t) const { // Horner
        Rat r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return Poly(std::move(d));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw BadParamsError("polynomial division by zero");
    Poly r = a;
    std::vector<Rat> q(std::max(0, a.degree() - b.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat f = r.leading() / b.leading();
        q[k] = f;
        r = r - Poly::monomial(f, k) * b;
    }
    return {Poly(std::move(q)), r};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

// Monic gcd.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = (Rat(1) / a.leading()) * a;
    return a;
}

// Resultant, normalized as lc(g)^{deg f} * prod over roots beta of g of f(beta):
// the Sylvester determinant with g's coefficient rows first. Zero exactly when
// f and g share a root over the algebraic closure.
inline Rat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw BadParamsError("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return Rat(0);
    int m = f.degree(), n = g.degree();
    if (m == 0) return pow_rat(f[0], n);
    if (n == 0) return pow_rat(g[0], m);
    int size = m + n;
    RatMatrix s(size, size);
    for (int i = 0; i < m; ++i) // m shifted copies of g
        for (int j = 0; j <= n; ++j) s(i, i + j) = g[n - j];
    for (int i = 0; i < n; ++i) // n shifted copies of f
        for (int j = 0; j <= m; ++j) s(m + i, i + j) = f[m - j];
    return det(s);
}

// Unique polynomial of degree < points.size() through the given points.
inline Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    Poly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly({-points[j].first, Rat(1)});
            denom *= points[i].first - points[j].first;
        }
        acc = acc + (points[i].second / denom) * basis;
    }
    return acc;
}

// Integer polynomial helpers used by the factorization code.

struct IntPoly {
    std::vector<Int> c; // ascending
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

// Clears denominators and divides by the content: primitive integer polynomial
// with positive leading coefficient, together with the rational multiplier q
// such that input = q * primitive.
inline std::pair<Rat, IntPoly> primitive_part(const Poly& p) {
    if (p.is_zero()) return {Rat(0), IntPoly{}};
    Int l(1);
    for (const Rat& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    IntPoly z;
    z.c.resize(p.coeffs().size());
    Int g(0);
    for (size_t i = 0; i < z.c.size(); ++i) {
        Rat v = p[static_cast<int>(i)] * Rat(l);
        z.c[i] = v.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.c[i].get_mpz_t());
    }
    if (sgn(z.c.back()) < 0) g = -g;
    for (auto& v : z.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    Rat mult(g, l);
    mult.canonicalize();
    return {mult, z};
}

inline Poly to_poly(const IntPoly& p) {
    std::vector<Rat> c(p.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.c[i]);
    return Poly(std::move(c));
}

} // namespace qp
