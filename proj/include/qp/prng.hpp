#pragma once

// Seeded randomness for the verification suites. A fixed 64-bit linear
// congruential generator (Knuth's MMIX constants) so that any counterexample
// replays bit-for-bit from (seed, trial index) in any implementation:
//
//   state <- state * 6364136223846793005 + 1442695040888963407
//   output = state >> 33
//
// Ranges are taken by modulo on the 31-bit output. Random rationals draw
// numerators from [-9, 9] and denominators from [1, 9], resampling until the
// constraint at hand (nonzero, invertible, in the slice) holds.

#include <cstdint>
#include <vector>

#include "qp/group.hpp"
#include "qp/hyperelliptic.hpp"
#include "qp/slice.hpp"

namespace qp {

class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat() { return make_rat(range(-9, 9), range(1, 9)); }

    Rat nonzero_rat() {
        for (;;) {
            Rat q = rat();
            if (q != 0) return q;
        }
    }

  private:
    std::uint64_t state_;
};

inline SlicePoint random_slice_point(Lcg64& rng, int n) {
    for (;;) {
        std::vector<Rat> a(n + 1), b(n + 1);
        for (int i = 0; i <= n; ++i) {
            a[i] = rng.rat();
            b[i] = rng.rat();
        }
        SlicePoint w(n, std::move(a), std::move(b));
        if (in_slice(w)) return w;
    }
}

// diagonal candidate with one forced proportionality a_i b_j = a_j b_i
inline SlicePoint random_singular_slice_point(Lcg64& rng, int n) {
    for (;;) {
        SlicePoint w = random_slice_point(rng, n);
        int i = static_cast<int>(rng.range(0, n)), j = static_cast<int>(rng.range(0, n));
        if (i == j) continue;
        Rat t = rng.nonzero_rat();
        w.a[j] = t * w.a[i];
        w.b[j] = t * w.b[i];
        return w;
    }
}

inline RatMatrix random_invertible_2x2(Lcg64& rng) {
    for (;;) {
        RatMatrix m{{rng.rat(), rng.rat()}, {rng.rat(), rng.rat()}};
        if (det(m) != 0) return m;
    }
}

inline Permutation random_permutation(Lcg64& rng, int size) {
    std::vector<int> v(size);
    for (int i = 0; i < size; ++i) v[i] = i;
    for (int i = size - 1; i > 0; --i) {
        int j = static_cast<int>(rng.range(0, i));
        std::swap(v[i], v[j]);
    }
    return Permutation(std::move(v));
}

inline GkElement random_gk_element(Lcg64& rng, int n, long k) {
    std::vector<Rat> lam(n + 1);
    for (auto& l : lam) l = rng.nonzero_rat();
    return GkElement(n, k, random_invertible_2x2(rng), std::move(lam), random_permutation(rng, n + 1));
}

inline GkElement random_central_element(Lcg64& rng, int n, long k) {
    return GkElement::central(n, k, rng.nonzero_rat());
}

// product of random integer shears: determinant exactly 1, entries modest
inline RatMatrix random_unimodular(Lcg64& rng, int size) {
    RatMatrix m = RatMatrix::identity(size);
    int ops = 2 * size;
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(rng.range(0, size - 1));
        int j = static_cast<int>(rng.range(0, size - 1));
        if (i == j) continue;
        Rat c(rng.range(-2, 2));
        if (c == 0) continue;
        for (int col = 0; col < size; ++col) m(i, col) += c * m(j, col);
    }
    return m;
}

inline GammaElement random_gamma_element(Lcg64& rng, int n) {
    // scale so det(A) is rarely +-1: the det^2 factors in the curve action
    // must actually show up
    Rat t = rng.nonzero_rat();
    return GammaElement(random_invertible_2x2(rng), t * random_unimodular(rng, n + 1));
}

// A smooth diagonal pencil together with a rational point on its curve with
// y != 0, manufactured by scaling one column: scaling column 0 by v scales
// the discriminant form by v, so the value at the chosen (x, z) becomes v^2.
inline std::pair<SlicePoint, WeightedPoint> random_curve_point(Lcg64& rng, int n) {
    for (;;) {
        SlicePoint w = random_slice_point(rng, n);
        Rat x = rng.rat(), z = rng.rat();
        if (x == 0 && z == 0) continue;
        Rat v = column_product_form(w).eval(x, z);
        if (v == 0) continue;
        w.a[0] *= v;
        w.b[0] *= v;
        return {w, WeightedPoint(x, z, v)};
    }
}

} // namespace qp
