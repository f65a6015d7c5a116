#pragma once

// Brute-force smoothness check over a finite field: scan the rational points
// of P^n(F_q) for a point on both quadrics where the Jacobian
// [grad Q1; grad Q2] = [2 Q1 x; 2 Q2 x] has rank < 2. Returns true when no
// such point exists.
//
// This is a one-sided oracle for pencils over Q: a smooth pencil can reduce
// badly at a prime, and a singular pencil's singular point need not be
// F_q-rational, so callers compare against the exact criterion at several
// primes and treat disagreement as a bad prime.
//
// The scan fixes all but the last coordinate and solves the two restricted
// quadrics for that coordinate (a square-root table lookup), so the cost is
// ~q^(n-1) prefixes instead of q^n points. n is capped at 4.

#include <array>
#include <cstdint>
#include <vector>

#include "qp/pencil.hpp"

namespace qp {

namespace detail {

struct ModPencil {
    long q;
    int size; // n + 1
    std::vector<long> q1, q2; // row-major, entries in [0, q)
    long at1(int i, int j) const { return q1[static_cast<size_t>(i) * size + j]; }
    long at2(int i, int j) const { return q2[static_cast<size_t>(i) * size + j]; }
};

inline bool is_odd_prime(long q) {
    if (q < 3 || q % 2 == 0) return false;
    for (long d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

inline long mod_reduce(const Rat& v, long q) {
    Int num = v.get_num() % q;
    if (num < 0) num += q;
    Int den = v.get_den() % q;
    if (den == 0) throw BadPrimeError("denominator divisible by the prime");
    // den^(q-2) mod q
    long d = den.get_si(), inv = 1, base = d, e = q - 2;
    while (e > 0) {
        if (e & 1) inv = inv * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return num.get_si() * inv % q;
}

// all of rank([Q1 x; Q2 x]) < 2, for a point already on both quadrics
inline bool jacobian_degenerate(const ModPencil& m, const std::vector<long>& x) {
    int s = m.size;
    std::vector<long> g1(s, 0), g2(s, 0);
    for (int i = 0; i < s; ++i) {
        long a1 = 0, a2 = 0;
        for (int j = 0; j < s; ++j) {
            a1 = (a1 + m.at1(i, j) * x[j]) % m.q;
            a2 = (a2 + m.at2(i, j) * x[j]) % m.q;
        }
        g1[i] = a1;
        g2[i] = a2;
    }
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if ((g1[i] * g2[j] - g1[j] * g2[i]) % m.q != 0) return false;
    return true;
}

struct SqrtTable {
    // roots[u]: the square roots of u, 0 <= u < q
    std::vector<std::array<long, 2>> roots;
    std::vector<int> count;
    explicit SqrtTable(long q) : roots(q, {0, 0}), count(q, 0) {
        for (long r = 0; r < q; ++r) {
            long u = r * r % q;
            if (count[u] < 2) roots[u][count[u]] = r;
            ++count[u];
        }
        // r and q-r give the same square; keep distinct roots only
        for (long u = 1; u < q; ++u)
            if (count[u] > 0) {
                count[u] = (roots[u][0] == 0 || 2 * roots[u][0] == q) ? 1 : 2;
                if (count[u] == 2) roots[u][1] = q - roots[u][0];
            }
        count[0] = 1;
    }
};

inline long pinv_mod(long a, long q) {
    long inv = 1, base = a % q, e = q - 2;
    while (e > 0) {
        if (e & 1) inv = inv * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return inv;
}

// common roots t of (alpha1 t^2 + 2 l1 t + gamma1) and (alpha2 t^2 + 2 l2 t + gamma2)
// appended to `out`; returns false when both restrict to zero (caller scans the line)
inline bool restricted_roots(long alpha1, long l1, long gamma1, long alpha2, long l2, long gamma2,
                             long q, const SqrtTable& tab, std::vector<long>& out) {
    out.clear();
    auto roots_of = [&](long alpha, long l, long gamma, std::vector<long>& r) -> bool {
        r.clear();
        if (alpha == 0) {
            if (l == 0) return gamma != 0; // gamma == 0: identically zero
            r.push_back((q - gamma) % q * pinv_mod(2 * l % q, q) % q);
            return true;
        }
        long disc = ((l * l - alpha * gamma) % q + q) % q;
        if (tab.count[disc] == 0 && disc != 0) return true; // no roots
        long ia = pinv_mod(alpha, q);
        for (int i = 0; i < tab.count[disc]; ++i) {
            long t = ((q - l) + tab.roots[disc][i]) % q * ia % q;
            r.push_back(t);
        }
        return true;
    };
    std::vector<long> r1, r2;
    bool f1 = roots_of(alpha1, l1, gamma1, r1);
    bool f2 = roots_of(alpha2, l2, gamma2, r2);
    if (!f1 && !f2) return false; // both lines identically zero
    if (!f1) {
        out = r2;
        return true;
    }
    if (!f2) {
        out = r1;
        return true;
    }
    for (long t : r1)
        for (long t2 : r2)
            if (t == t2) out.push_back(t);
    return true;
}

// diagonal pencils: partial sums via an odometer over the middle coordinates
inline bool scan_diagonal(const ModPencil& m, const SqrtTable& tab) {
    long q = m.q;
    int n = m.size - 1;
    std::vector<long> da(m.size), db(m.size);
    for (int i = 0; i < m.size; ++i) {
        da[i] = m.at1(i, i);
        db[i] = m.at2(i, i);
    }
    std::vector<long> sq(q);
    for (long v = 0; v < q; ++v) sq[v] = v * v % q;

    std::vector<long> x(m.size, 0), roots;
    auto check_candidate = [&](long t) -> bool { // true when a singular point is found
        x[n] = t;
        return jacobian_degenerate(m, x);
    };

    for (int chart = 0; chart <= n; ++chart) {
        for (int i = 0; i < m.size; ++i) x[i] = 0;
        x[chart] = 1;
        if (chart == n) { // single point e_n
            if (da[n] % q == 0 && db[n] % q == 0 && jacobian_degenerate(m, x)) return true;
            continue;
        }
        int lo = chart + 1, hi = n; // middle coordinates [lo, hi)
        int mid = hi - lo;
        std::vector<long> idx(mid, 0);
        std::vector<long> s1(mid + 1), s2(mid + 1);
        s1[0] = da[chart] % q;
        s2[0] = db[chart] % q;
        for (int d = 0; d < mid; ++d) {
            s1[d + 1] = s1[d];
            s2[d + 1] = s2[d];
        }
        long an = da[n] % q, bn = db[n] % q;
        long inv_an = an ? pinv_mod(an, q) : 0, inv_bn = bn ? pinv_mod(bn, q) : 0;

        while (true) {
            long g1 = s1[mid], g2 = s2[mid];
            // solve an t^2 = -g1, bn t^2 = -g2
            long ng1 = (q - g1) % q, ng2 = (q - g2) % q;
            if (an != 0) {
                long u = ng1 * inv_an % q;
                if (bn * u % q == ng2) {
                    for (int i = 0; i < tab.count[u]; ++i)
                        if (check_candidate(tab.roots[u][i])) return true;
                }
            } else if (bn != 0) {
                if (g1 == 0) {
                    long u = ng2 * inv_bn % q;
                    for (int i = 0; i < tab.count[u]; ++i)
                        if (check_candidate(tab.roots[u][i])) return true;
                }
            } else {
                if (g1 == 0 && g2 == 0)
                    for (long t = 0; t < q; ++t)
                        if (check_candidate(t)) return true;
            }
            // odometer step
            int d = mid - 1;
            while (d >= 0 && idx[d] == q - 1) {
                idx[d] = 0;
                --d;
            }
            if (d < 0) break;
            ++idx[d];
            x[lo + d] = idx[d];
            for (int e = d; e < mid; ++e) {
                x[lo + e] = idx[e];
                s1[e + 1] = (s1[e] + da[lo + e] * sq[idx[e]]) % q;
                s2[e + 1] = (s2[e] + db[lo + e] * sq[idx[e]]) % q;
            }
        }
    }
    return false;
}

inline bool scan_general(const ModPencil& m, const SqrtTable& tab) {
    long q = m.q;
    int n = m.size - 1;
    std::vector<long> x(m.size, 0), roots;

    for (int chart = 0; chart <= n; ++chart) {
        for (int i = 0; i < m.size; ++i) x[i] = 0;
        x[chart] = 1;
        if (chart == n) {
            if (m.at1(n, n) % q == 0 && m.at2(n, n) % q == 0 && jacobian_degenerate(m, x)) return true;
            continue;
        }
        int lo = chart + 1, mid = n - lo;
        std::vector<long> idx(mid, 0);
        while (true) {
            for (int e = 0; e < mid; ++e) x[lo + e] = idx[e];
            x[n] = 0;
            // restrict both quadrics to the line u + t*e_n
            long gamma1 = 0, gamma2 = 0, l1 = 0, l2 = 0;
            for (int i = 0; i < n; ++i) {
                if (x[i] == 0) continue;
                l1 = (l1 + m.at1(i, n) * x[i]) % q;
                l2 = (l2 + m.at2(i, n) * x[i]) % q;
                for (int j = 0; j < n; ++j) {
                    if (x[j] == 0) continue;
                    gamma1 = (gamma1 + m.at1(i, j) * x[i] % q * x[j]) % q;
                    gamma2 = (gamma2 + m.at2(i, j) * x[i] % q * x[j]) % q;
                }
            }
            if (restricted_roots(m.at1(n, n), l1, gamma1, m.at2(n, n), l2, gamma2, q, tab, roots)) {
                for (long t : roots) {
                    x[n] = t;
                    if (jacobian_degenerate(m, x)) return true;
                }
            } else {
                for (long t = 0; t < q; ++t) {
                    x[n] = t;
                    if (jacobian_degenerate(m, x)) return true;
                }
            }
            int d = mid - 1;
            while (d >= 0 && idx[d] == q - 1) {
                idx[d] = 0;
                --d;
            }
            if (d < 0) break;
            ++idx[d];
        }
    }
    return false;
}

} // namespace detail

// True iff the reduction of the pencil mod q has no F_q-rational singular
// point of the complete intersection.
inline bool jacobian_smooth_oracle(const QuadricPencil& p, long q) {
    if (p.n > 4) throw TooLargeError("oracle scan is capped at n <= 4");
    if (!detail::is_odd_prime(q)) throw BadPrimeError("modulus must be an odd prime");
    detail::ModPencil m;
    m.q = q;
    m.size = p.n + 1;
    m.q1.resize(static_cast<size_t>(m.size) * m.size);
    m.q2.resize(m.q1.size());
    for (int i = 0; i < m.size; ++i)
        for (int j = 0; j < m.size; ++j) {
            m.q1[static_cast<size_t>(i) * m.size + j] = detail::mod_reduce(p.q1(i, j), q);
            m.q2[static_cast<size_t>(i) * m.size + j] = detail::mod_reduce(p.q2(i, j), q);
        }
    detail::SqrtTable tab(q);
    bool singular = p.is_diagonal() ? detail::scan_diagonal(m, tab) : detail::scan_general(m, tab);
    return !singular;
}

} // namespace qp
