#pragma once

#include <numeric>
#include <vector>

#include "ebq/common.hpp"

namespace ebq {

/// Permutation of {0,...,n-1}. Composition applies the right factor
/// first: (a * b)(x) = a(b(x)).
class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
      require(x >= 0 && x < static_cast<int>(img_.size()) && !seen[x],
              "Perm: images are not a permutation");
      seen[x] = true;
    }
  }

  static Perm identity(int degree) {
    std::vector<int> v(degree);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& o) const {
    require(degree() == o.degree(), "Perm: degree mismatch");
    std::vector<int> v(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
      v[x] = img_[o.img_[x]];
    Perm p;
    p.img_ = std::move(v);
    return p;
  }

  Perm inverse() const {
    std::vector<int> v(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
      v[img_[x]] = static_cast<int>(x);
    Perm p;
    p.img_ = std::move(v);
    return p;
  }

  bool is_identity() const {
    for (size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != static_cast<int>(x))
        return false;
    return true;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;
};

} // namespace ebq
