#pragma once

// Automorphisms of a configuration of n+1 distinct points of P^1: pairs of a
// Mobius class and the permutation it induces. Found by brute force over the
// permutations: a Mobius map is pinned by three point correspondences, and a
// map pinned by rational correspondences has rational entries, so the search
// over Q is complete even over the algebraic closure.

#include <algorithm>
#include <utility>
#include <vector>

#include "qp/group_maps.hpp"
#include "qp/projective.hpp"
#include "qp/slice.hpp"

namespace qp {

struct ConfigAut {
    RatMatrix moebius; // 2x2, normalized so the first nonzero entry is 1
    Permutation perm;  // moebius sends p_i to p_{perm(i)}

    bool operator==(const ConfigAut& o) const { return moebius == o.moebius && perm == o.perm; }
};

namespace detail {

// coefficients (alpha, beta) with q2 = alpha q0 + beta q1; distinct points
// make the system nonsingular and both coefficients nonzero
inline std::pair<Rat, Rat> express(const ProjectiveLinePoint& q0, const ProjectiveLinePoint& q1,
                                   const ProjectiveLinePoint& q2) {
    Rat d = q0.x * q1.y - q0.y * q1.x;
    Rat alpha = (q2.x * q1.y - q2.y * q1.x) / d;
    Rat beta = (q0.x * q2.y - q0.y * q2.x) / d;
    return {alpha, beta};
}

inline bool sends_to(const RatMatrix& m, const ProjectiveLinePoint& p, const ProjectiveLinePoint& q) {
    Rat ix = m(0, 0) * p.x + m(0, 1) * p.y;
    Rat iy = m(1, 0) * p.x + m(1, 1) * p.y;
    return ix * q.y - iy * q.x == 0;
}

} // namespace detail

inline std::vector<ConfigAut> configuration_automorphisms(const std::vector<ProjectiveLinePoint>& pts,
                                                          int cap = 9) {
    int count = static_cast<int>(pts.size());
    if (count < 4) throw BadParamsError("need at least 4 points");
    if (count > cap) throw TooManyPointsError("configuration exceeds the factorial-search cap");
    if (!all_distinct(pts)) throw PointsNotDistinctError("configuration points must be distinct");

    std::vector<ConfigAut> group;
    std::vector<int> images(count);
    for (int i = 0; i < count; ++i) images[i] = i;
    do {
        Permutation sigma{images};
        // Mobius map forced by the first three correspondences
        auto [alpha, beta] = detail::express(pts[0], pts[1], pts[2]);
        auto [gamma, delta] = detail::express(pts[sigma(0)], pts[sigma(1)], pts[sigma(2)]);
        RatMatrix src{{alpha * pts[0].x, beta * pts[1].x}, {alpha * pts[0].y, beta * pts[1].y}};
        RatMatrix dst{{gamma * pts[sigma(0)].x, delta * pts[sigma(1)].x},
                      {gamma * pts[sigma(0)].y, delta * pts[sigma(1)].y}};
        RatMatrix m = dst * inverse(src);
        bool ok = true;
        for (int i = 3; i < count && ok; ++i) ok = detail::sends_to(m, pts[i], pts[sigma(i)]);
        if (ok) group.push_back(ConfigAut{pgl_normalize(m), sigma});
    } while (std::next_permutation(images.begin(), images.end()));

    // sanity: identity present and the set is closed under composition
    bool has_id = false;
    for (const auto& g : group) has_id = has_id || (g.perm.is_identity() && g.moebius == RatMatrix::identity(2));
    if (!has_id) throw Error("internal: configuration stabilizer lost the identity");
    for (const auto& g : group)
        for (const auto& h : group) {
            ConfigAut gh{pgl_normalize(g.moebius * h.moebius), g.perm * h.perm};
            bool found = false;
            for (const auto& e : group) found = found || (e == gh);
            if (!found) throw Error("internal: configuration stabilizer not closed");
        }
    return group;
}

// |Stab_{G_k}(w)| = |k|^n * |Aut of the configuration|: the level-change
// kernel contributes |k|^n over the level -1 stabilizer, which is the
// configuration automorphism group.
inline Int stabilizer_cardinality(const SlicePoint& w, long k, int cap = 9) {
    if (k == 0) throw BadParamsError("level must be nonzero");
    auto auts = configuration_automorphisms(configuration(w), cap);
    Int base = pow_int(Int(k < 0 ? -k : k), static_cast<unsigned long>(w.n));
    return base * static_cast<long>(auts.size());
}

} // namespace qp
