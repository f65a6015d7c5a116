#pragma once

#include <numeric>
#include <vector>

#include "qp/matrix.hpp"

namespace qp {

// Permutation of {0..n}; images[i] = sigma(i).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : im_(std::move(images)) {
        std::vector<bool> seen(im_.size(), false);
        for (int v : im_) {
            if (v < 0 || v >= static_cast<int>(im_.size()) || seen[v])
                throw BadParamsError("not a permutation");
            seen[v] = true;
        }
    }
    static Permutation id(int size) {
        std::vector<int> v(size);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(im_.size()); }
    int operator()(int i) const { return im_[i]; }
    const std::vector<int>& images() const { return im_; }

    Permutation inverse() const {
        std::vector<int> inv(im_.size());
        for (int i = 0; i < size(); ++i) inv[im_[i]] = i;
        return Permutation(std::move(inv));
    }

    // (sigma * tau)(i) = sigma(tau(i))
    Permutation operator*(const Permutation& o) const {
        if (size() != o.size()) throw SizeMismatchError("permutation size mismatch");
        std::vector<int> r(im_.size());
        for (int i = 0; i < size(); ++i) r[i] = im_[o.im_[i]];
        return Permutation(std::move(r));
    }

    bool operator==(const Permutation& o) const { return im_ == o.im_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return im_ < o.im_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (im_[i] != i) return false;
        return true;
    }

    int sign() const {
        std::vector<bool> seen(im_.size(), false);
        int s = 1;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = im_[j];
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    // matrix sending e_i to e_{sigma(i)}: entry (sigma(i), i) = 1
    RatMatrix matrix() const {
        RatMatrix m(size(), size());
        for (int i = 0; i < size(); ++i) m(im_[i], i) = 1;
        return m;
    }

    // coordinate permutation (sigma * v)_i = v_{sigma^{-1}(i)}
    template <typename T>
    std::vector<T> permute(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != size()) throw SizeMismatchError("permute size mismatch");
        std::vector<T> r(v.size());
        for (int i = 0; i < size(); ++i) r[im_[i]] = v[i];
        return r;
    }

  private:
    std::vector<int> im_;
};

} // namespace qp
