#pragma once

// Factorization of univariate polynomials over the rationals, and of binary
// forms over the rationals. Deterministic throughout:
//
//   1. Yun squarefree decomposition (inputs here are usually squarefree
//      already, but the split costs one gcd).
//   2. For each squarefree part: Berlekamp factorization modulo a small prime
//      where the reduction stays squarefree. If some prime reports a single
//      factor the part is certified irreducible and we stop.
//   3. Otherwise quadratic Hensel lifting of the modular factors past twice
//      the Mignotte coefficient bound, then Zassenhaus subset recombination.
//
// Degrees in this project stay below ~25 and coefficients are desk scale, so
// the subset search is tiny in practice.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "qp/binary_form.hpp"
#include "qp/poly.hpp"

namespace qp {

namespace detail {

// ---- arithmetic in F_p[x], p a small odd prime, coefficients in [0, p) ----

using PPoly = std::vector<long>; // ascending, trimmed

inline void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long pinv(long a, long p) { // inverse mod p via extended Euclid
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return ((t % p) + p) % p;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    ptrim(c);
    return c;
}

inline PPoly pmod(PPoly a, const PPoly& m, long p) {
    long inv_lead = pinv(m.back(), p);
    while (a.size() >= m.size()) {
        long f = a.back() * inv_lead % p;
        size_t off = a.size() - m.size();
        if (f != 0)
            for (size_t j = 0; j < m.size(); ++j) a[off + j] = ((a[off + j] - f * m[j]) % p + p) % p;
        a.pop_back();
        ptrim(a);
    }
    return a;
}

inline PPoly pgcd(PPoly a, PPoly b, long p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = pinv(a.back(), p);
        for (auto& v : a) v = v * inv % p;
    }
    return a;
}

// extended Euclid: s*a + t*b = 1 for coprime a, b (monic inputs not required)
inline void pbezout(const PPoly& a, const PPoly& b, long p, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // divmod r0 by r1
        PPoly q;
        PPoly rem = r0;
        long inv_lead = pinv(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long f = rem.back() * inv_lead % p;
            size_t off = rem.size() - r1.size();
            q[off] = f;
            for (size_t j = 0; j < r1.size(); ++j) rem[off + j] = ((rem[off + j] - f * r1[j]) % p + p) % p;
            ptrim(rem);
            if (rem.size() < r1.size()) break;
        }
        ptrim(q);
        auto step = [&](PPoly& x0, PPoly& x1) {
            PPoly nx = x0; // nx = x0 - q*x1
            PPoly qx = pmul(q, x1, p);
            if (nx.size() < qx.size()) nx.resize(qx.size(), 0);
            for (size_t i = 0; i < qx.size(); ++i) nx[i] = ((nx[i] - qx[i]) % p + p) % p;
            ptrim(nx);
            x0 = std::move(x1);
            x1 = std::move(nx);
        };
        r0 = std::move(r1);
        r1 = std::move(rem);
        step(s0, s1);
        step(t0, t1);
    }
    // r0 = gcd = constant (inputs coprime); scale to make it 1
    long inv = pinv(r0[0], p);
    for (auto& v : s0) v = v * inv % p;
    for (auto& v : t0) v = v * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

// Berlekamp: f monic squarefree mod p. Returns the monic irreducible factors.
// If count_only, stops after computing the nullity.
inline std::vector<PPoly> berlekamp(const PPoly& f, long p, int* factor_count, bool count_only) {
    int d = static_cast<int>(f.size()) - 1;
    // frobenius rows: row i = coeffs of x^(p*i) mod f
    PPoly xp = {0, 1}; // will become x^p mod f
    {
        // binary exponentiation
        PPoly base = {0, 1}, acc = {1};
        long e = p;
        while (e > 0) {
            if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
            base = pmod(pmul(base, base, p), f, p);
            e >>= 1;
        }
        xp = acc;
    }
    std::vector<PPoly> rows(d);
    rows[0] = {1};
    for (int i = 1; i < d; ++i) rows[i] = pmod(pmul(rows[i - 1], xp, p), f, p);

    // kernel of (Q - I) acting on coefficient row vectors
    std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) m[i][j] = rows[i][j];
        m[i][i] = ((m[i][i] - 1) % p + p) % p;
    }
    // row-reduce m^T so kernel vectors come out of the columns of m
    std::vector<std::vector<long>> a(d, std::vector<long>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[j][i] = m[i][j];
    std::vector<int> pivot_of_col(d, -1);
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int piv = -1;
        for (int i = rank; i < d; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        long inv = pinv(a[rank][col], p);
        for (int j = 0; j < d; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int i = 0; i < d; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long f2 = a[i][col];
            for (int j = 0; j < d; ++j) a[i][j] = ((a[i][j] - f2 * a[rank][j]) % p + p) % p;
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    int nullity = d - rank;
    *factor_count = nullity;
    if (count_only || nullity == 1) return {f};

    std::vector<PPoly> basis;
    for (int col = 0; col < d; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<long> v(d, 0);
        v[col] = 1;
        for (int c2 = 0; c2 < d; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = (p - a[pivot_of_col[c2]][col]) % p;
        PPoly b(v.begin(), v.end());
        ptrim(b);
        basis.push_back(std::move(b));
    }

    std::vector<PPoly> factors = {f};
    for (const PPoly& v : basis) {
        if (static_cast<int>(factors.size()) == nullity) break;
        if (v.size() <= 1) continue; // constants split nothing
        for (long c = 0; c < p && static_cast<int>(factors.size()) < nullity; ++c) {
            PPoly vc = v;
            vc[0] = ((vc[0] - c) % p + p) % p;
            ptrim(vc);
            std::vector<PPoly> next;
            for (const PPoly& u : factors) {
                if (static_cast<int>(u.size()) <= 2) {
                    next.push_back(u);
                    continue;
                }
                PPoly g = pgcd(u, vc, p);
                if (g.size() > 1 && g.size() < u.size()) {
                    PPoly rest = u;
                    // rest = u / g (exact)
                    PPoly quot;
                    long inv_lead = pinv(g.back(), p);
                    quot.assign(rest.size() - g.size() + 1, 0);
                    while (rest.size() >= g.size() && !rest.empty()) {
                        long fq = rest.back() * inv_lead % p;
                        size_t off = rest.size() - g.size();
                        quot[off] = fq;
                        for (size_t j = 0; j < g.size(); ++j)
                            rest[off + j] = ((rest[off + j] - fq * g[j]) % p + p) % p;
                        ptrim(rest);
                    }
                    next.push_back(g);
                    next.push_back(quot);
                } else {
                    next.push_back(u);
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ---- arithmetic in (Z/m)[x], m an mpz power of p ----

struct MPoly {
    std::vector<Int> c; // ascending, trimmed, coefficients in [0, m)
};

inline void mtrim(MPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

inline MPoly mreduce(const std::vector<Int>& c, const Int& m) {
    MPoly r;
    r.c.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        r.c[i] = c[i] % m;
        if (r.c[i] < 0) r.c[i] += m;
    }
    mtrim(r);
    return r;
}

inline MPoly mmul(const MPoly& a, const MPoly& b, const Int& m) {
    if (a.c.empty() || b.c.empty()) return {};
    std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    }
    return mreduce(c, m);
}

inline MPoly madd(const MPoly& a, const MPoly& b, const Int& m) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return mreduce(c, m);
}

inline MPoly msub(const MPoly& a, const MPoly& b, const Int& m) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return mreduce(c, m);
}

// divmod by a monic divisor
inline std::pair<MPoly, MPoly> mdivmod(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly rem = a, quot;
    if (a.c.size() >= b.c.size()) quot.c.assign(a.c.size() - b.c.size() + 1, Int(0));
    while (rem.c.size() >= b.c.size() && !rem.c.empty()) {
        Int f = rem.c.back();
        size_t off = rem.c.size() - b.c.size();
        quot.c[off] = f;
        for (size_t j = 0; j < b.c.size(); ++j) {
            rem.c[off + j] -= f * b.c[j];
            rem.c[off + j] %= m;
            if (rem.c[off + j] < 0) rem.c[off + j] += m;
        }
        rem.c.pop_back();
        mtrim(rem);
    }
    mtrim(quot);
    return {quot, rem};
}

// One quadratic Hensel step: given f = u v (mod m) and s u + t v = 1 (mod m),
// with v monic and lc(u) = lc(f) mod m, produce the same data mod m^2.
inline void hensel_step(const MPoly& f, MPoly& u, MPoly& v, MPoly& s, MPoly& t, const Int& m) {
    Int m2 = m * m;
    MPoly e = msub(f, mmul(u, v, m2), m2);
    auto [q, r] = mdivmod(mmul(s, e, m2), v, m2);
    MPoly unew = madd(u, madd(mmul(t, e, m2), mmul(q, u, m2), m2), m2);
    MPoly vnew = madd(v, r, m2);
    if (vnew.c.size() != v.c.size() || unew.c.size() != u.c.size())
        throw Error("internal: hensel step changed factor degrees");
    u = std::move(unew);
    v = std::move(vnew);
    // lift the Bezout pair alongside
    MPoly one;
    one.c = {Int(1)};
    MPoly b = msub(madd(mmul(s, u, m2), mmul(t, v, m2), m2), one, m2);
    auto [q2, r2] = mdivmod(mmul(s, b, m2), v, m2);
    MPoly snew = msub(s, r2, m2);
    MPoly tnew = msub(msub(t, mmul(t, b, m2), m2), mmul(q2, u, m2), m2);
    s = std::move(snew);
    t = std::move(tnew);
}

inline MPoly from_ppoly(const PPoly& a) {
    MPoly r;
    r.c.reserve(a.size());
    for (long v : a) r.c.push_back(Int(v));
    return r;
}

// Lift the factorization F = prod(factors) from mod p to mod p^(2^steps),
// balanced-tree recursion. F and all factors monic.
inline std::vector<MPoly> lift_tree(const MPoly& F, const std::vector<PPoly>& factors, size_t lo, size_t hi,
                                    long p, int steps) {
    if (hi - lo == 1) return {F};
    size_t mid = lo + (hi - lo) / 2;
    PPoly u0 = {1}, v0 = {1};
    for (size_t i = lo; i < mid; ++i) u0 = pmul(u0, factors[i], p);
    for (size_t i = mid; i < hi; ++i) v0 = pmul(v0, factors[i], p);
    PPoly sb, tb;
    pbezout(u0, v0, p, sb, tb);
    MPoly u = from_ppoly(u0), v = from_ppoly(v0), s = from_ppoly(sb), t = from_ppoly(tb);
    Int m(p);
    for (int i = 0; i < steps; ++i) {
        hensel_step(F, u, v, s, t, m);
        m = m * m;
    }
    auto left = lift_tree(u, factors, lo, mid, p, steps);
    auto right = lift_tree(v, factors, mid, hi, p, steps);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

inline Int centered(const Int& v, const Int& m) {
    Int h = m / 2;
    return v > h ? Int(v - m) : v;
}

// true iff b divides a in Q[x] (b nonzero)
inline bool poly_divides(const Poly& b, const Poly& a) { return (a % b).is_zero(); }

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 1 with
// positive leading coefficient. Returns primitive irreducible integer factors.
inline std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& z) {
    int d = z.degree();
    if (d <= 0) throw Error("internal: factoring a constant");
    if (d == 1) return {z};

    Poly zq = to_poly(z);

    // choose a prime keeping z squarefree; certify irreducibility cheaply if
    // any of the first few usable primes reports a single modular factor
    long best_p = 0;
    int best_count = 1 << 30;
    int usable_seen = 0;
    for (long p = 3; p < 10000 && usable_seen < 3; p += 2) {
        bool prime = true;
        for (long q = 3; q * q <= p; q += 2)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (z.c.back() % p == 0) continue;
        PPoly fp(z.c.size());
        for (size_t i = 0; i < z.c.size(); ++i) {
            Int r = z.c[i] % p;
            if (r < 0) r += p;
            fp[i] = r.get_si();
        }
        ptrim(fp);
        // monicize
        long inv = pinv(fp.back(), p);
        for (auto& v : fp) v = v * inv % p;
        // squarefree mod p?
        PPoly dfp(fp.size() - 1);
        for (size_t i = 1; i < fp.size(); ++i) dfp[i - 1] = (fp[i] * (long)(i % p)) % p;
        ptrim(dfp);
        if (dfp.empty() || pgcd(fp, dfp, p).size() > 1) continue;
        ++usable_seen;
        int count = 0;
        berlekamp(fp, p, &count, /*count_only=*/true);
        if (count == 1) return {z}; // irreducible certificate
        if (count < best_count) {
            best_count = count;
            best_p = p;
        }
    }
    if (best_p == 0) throw Error("internal: no usable prime for factorization");

    long p = best_p;
    PPoly fp(z.c.size());
    for (size_t i = 0; i < z.c.size(); ++i) {
        Int r = z.c[i] % p;
        if (r < 0) r += p;
        fp[i] = r.get_si();
    }
    long inv = pinv(fp.back(), p);
    for (auto& v : fp) v = v * inv % p;
    int count = 0;
    std::vector<PPoly> modular = berlekamp(fp, p, &count, /*count_only=*/false);
    std::sort(modular.begin(), modular.end()); // deterministic order

    // coefficient bound for any factor of z times lc(z)
    Int norm2(0);
    for (const Int& c : z.c) norm2 += c * c;
    Int bound = sqrt(norm2) + 1;
    bound = bound * pow_int(Int(2), d) * abs(z.c.back());
    int steps = 0;
    Int pk(p);
    while (pk <= 2 * bound) {
        pk = pk * pk;
        ++steps;
    }

    MPoly F;
    {
        // monic version of z mod p^(2^steps)
        std::vector<Int> c(z.c.begin(), z.c.end());
        F = mreduce(c, pk);
        Int il;
        if (mpz_invert(il.get_mpz_t(), F.c.back().get_mpz_t(), pk.get_mpz_t()) == 0)
            throw Error("internal: lc not invertible");
        for (auto& v : F.c) v = v * il % pk;
    }
    std::vector<MPoly> lifted = lift_tree(F, modular, 0, modular.size(), p, steps);

    // subset recombination
    std::vector<IntPoly> out;
    IntPoly rest = z;
    std::vector<MPoly> pool = std::move(lifted);
    int subset_size = 1;
    while (2 * subset_size <= static_cast<int>(pool.size())) {
        bool found = false;
        std::vector<int> idx(subset_size);
        for (int i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            MPoly prod;
            prod.c = {rest.c.back() % pk};
            for (int i : idx) prod = mmul(prod, pool[i], pk);
            std::vector<Rat> cand(prod.c.size());
            for (size_t i = 0; i < prod.c.size(); ++i) cand[i] = Rat(centered(prod.c[i], pk));
            auto [mult, h] = primitive_part(Poly(std::move(cand)));
            (void)mult;
            Poly hq = to_poly(h);
            Poly restq = to_poly(rest);
            if (!h.is_zero() && h.degree() >= 1 && poly_divides(hq, restq)) {
                out.push_back(h);
                auto [q, r] = divmod(restq, hq);
                if (!r.is_zero()) throw Error("internal: recombination division");
                auto [m2, zq2] = primitive_part(q);
                (void)m2;
                rest = zq2;
                std::vector<MPoly> np;
                for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                    if (k < idx.size() && static_cast<int>(i) == idx[k]) {
                        ++k;
                        continue;
                    }
                    np.push_back(pool[i]);
                }
                pool = std::move(np);
                found = true;
                break;
            }
            // next combination
            int i = subset_size - 1;
            while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - subset_size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (rest.degree() >= 1) out.push_back(rest);
    return out;
}

} // namespace detail

struct PolyFactorization {
    Rat unit;                                 // f = unit * prod factors[i]^mult[i]
    std::vector<std::pair<Poly, int>> factors; // monic irreducible over Q
};

inline PolyFactorization factor_poly(const Poly& f) {
    if (f.is_zero()) throw BadParamsError("factoring the zero polynomial");
    PolyFactorization result;
    result.unit = f.leading();
    if (f.degree() == 0) return result;
    Poly monic = (Rat(1) / f.leading()) * f;

    // Yun squarefree decomposition
    std::vector<std::pair<Poly, int>> squarefree_parts;
    {
        Poly g = gcd(monic, monic.derivative());
        Poly c = monic / g;
        Poly d = monic.derivative() / g - c.derivative();
        int mult = 1;
        while (c.degree() > 0) {
            Poly a = gcd(c, d);
            if (a.degree() > 0) squarefree_parts.push_back({a, mult});
            c = c / a;
            d = d / a - c.derivative();
            ++mult;
        }
    }

    for (auto& [part, mult] : squarefree_parts) {
        auto [scale, z] = primitive_part(part);
        (void)scale; // part is monic; the scale folds back in when re-monicizing factors
        for (const auto& zf : detail::factor_squarefree_primitive(z)) {
            Poly q = to_poly(zf);
            q = (Rat(1) / q.leading()) * q;
            result.factors.push_back({q, mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
                  for (int i = a.first.degree(); i >= 0; --i) {
                      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
                  }
                  return a.second < b.second;
              });
    return result;
}

struct FormFactorization {
    Rat constant;                                  // F = constant * prod factors[i]^mult[i]
    std::vector<std::pair<BinaryForm, int>> factors; // primitive integer coefficients, deg >= 1
};

// Complete factorization of a nonzero binary form into irreducible forms over
// the rationals. A root at [1:0] shows up as the linear factor x1.
inline FormFactorization factor_form(const BinaryForm& F) {
    if (F.is_zero()) throw ZeroFormError("factoring the zero form");
    FormFactorization out;
    int d = F.degree();
    int inf_mult = 0;
    while (inf_mult <= d && F[inf_mult] == 0) ++inf_mult; // power of x1 dividing F
    if (inf_mult > 0) out.factors.push_back({BinaryForm::x1(), inf_mult});

    Poly p = F.dehomogenize(); // degree d - inf_mult
    PolyFactorization pf = factor_poly(p);
    out.constant = pf.unit;
    for (auto& [q, mult] : pf.factors) {
        auto [scale, z] = primitive_part(q);
        out.constant *= pow_rat(scale, mult);
        out.factors.push_back({homogenize(to_poly(z), z.degree()), mult});
    }
    return out;
}

} // namespace qp
