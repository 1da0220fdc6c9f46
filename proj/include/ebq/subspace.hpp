#pragma once

#include <utility>
#include <vector>

#include "ebq/vecmat.hpp"

namespace ebq {

/// Subspace of F^n kept as a reduced-echelon row basis, so equal
/// subspaces compare equal and every construction is canonical.
class Subspace {
public:
  Subspace(Field f, int ambient)
      : basis_(std::move(f), 0, ambient) {}

  static Subspace span(const Mat& rows) {
    Mat r = rows;
    auto piv = r.rref();
    Mat b(rows.field(), static_cast<int>(piv.size()), rows.cols());
    for (size_t i = 0; i < piv.size(); ++i)
      b.set_row(static_cast<int>(i), r.row(static_cast<int>(i)));
    Subspace s(rows.field(), rows.cols());
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace span(const Field& f, const std::vector<Vec>& rows, int ambient) {
    return span(Mat::from_rows(f, rows, ambient));
  }

  int dim() const { return basis_.rows(); }
  int ambient() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }

  bool contains(const Vec& v) const {
    const Field& F = basis_.field();
    Vec w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
      int p = pivot_col(i);
      ffe fac = w[p];
      if (!fac)
        continue;
      for (int j = 0; j < basis_.cols(); ++j)
        w[j] = F.sub(w[j], F.mul(fac, basis_.at(i, j)));
    }
    return is_zero(w);
  }

  bool contains(const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row(i)))
        return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    return span(basis_.vstack(o.basis_));
  }

  /// Zassenhaus intersection.
  Subspace intersect(const Subspace& o) const {
    const Field& F = basis_.field();
    int n = ambient();
    Mat big(F, dim() + o.dim(), 2 * n);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < n; ++j) {
        big.at(i, j) = basis_.at(i, j);
        big.at(i, n + j) = basis_.at(i, j);
      }
    for (int i = 0; i < o.dim(); ++i)
      for (int j = 0; j < n; ++j)
        big.at(dim() + i, j) = o.basis_.at(i, j);
    big.rref();
    std::vector<Vec> inter;
    for (int i = 0; i < big.rows(); ++i) {
      bool left_zero = true;
      for (int j = 0; j < n && left_zero; ++j)
        if (big.at(i, j))
          left_zero = false;
      if (!left_zero)
        continue;
      Vec right(n);
      bool nz = false;
      for (int j = 0; j < n; ++j) {
        right[j] = big.at(i, n + j);
        nz = nz || right[j];
      }
      if (nz)
        inter.push_back(std::move(right));
    }
    return span(F, inter, n);
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  int pivot_col(int i) const {
    for (int j = 0; j < basis_.cols(); ++j)
      if (basis_.at(i, j))
        return j;
    return basis_.cols();
  }

  Mat basis_;
};

} // namespace ebq
