#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ebq/gf.hpp"

namespace ebq {

using Vec = std::vector<ffe>;

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), 0); }

inline bool is_zero(const Vec& v) {
  for (ffe x : v)
    if (x)
      return false;
  return true;
}

inline void axpy(const Field& F, Vec& y, ffe a, const Vec& x) {
  for (size_t i = 0; i < y.size(); ++i)
    y[i] = F.add(y[i], F.mul(a, x[i]));
}

inline Vec scaled(const Field& F, const Vec& v, ffe a) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    r[i] = F.mul(a, v[i]);
  return r;
}

inline Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = F.add(a[i], b[i]);
  return r;
}

inline Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = F.sub(a[i], b[i]);
  return r;
}

/// Dense matrix over a finite field. Rows are the primary unit: row
/// spans represent subspaces, columns act on coefficient vectors.
class Mat {
public:
  Mat(Field f, int rows, int cols)
      : f_(std::move(f)), rows_(rows), cols_(cols),
        d_(static_cast<size_t>(rows) * cols, 0) {}

  static Mat identity(const Field& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }

  static Mat from_rows(const Field& f, const std::vector<Vec>& rows, int cols) {
    Mat m(f, static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      require(static_cast<int>(rows[i].size()) == cols, "Mat: ragged rows");
      for (int j = 0; j < cols; ++j)
        m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  ffe& at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  ffe at(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    return Vec(d_.begin() + static_cast<size_t>(i) * cols_,
               d_.begin() + static_cast<size_t>(i + 1) * cols_);
  }

  void set_row(int i, const Vec& v) {
    require(static_cast<int>(v.size()) == cols_, "Mat: row size mismatch");
    std::copy(v.begin(), v.end(), d_.begin() + static_cast<size_t>(i) * cols_);
  }

  /// Matrix times column vector of coefficients.
  Vec apply(const Vec& v) const {
    require(static_cast<int>(v.size()) == cols_, "Mat::apply: size mismatch");
    Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
      ffe acc = 0;
      const ffe* rp = &d_[static_cast<size_t>(i) * cols_];
      for (int j = 0; j < cols_; ++j)
        if (rp[j] && v[j])
          acc = f_.add(acc, f_.mul(rp[j], v[j]));
      r[i] = acc;
    }
    return r;
  }

  Mat mul(const Mat& o) const {
    require(cols_ == o.rows_, "Mat::mul: shape mismatch");
    Mat r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        ffe a = at(i, k);
        if (!a)
          continue;
        for (int j = 0; j < o.cols_; ++j) {
          ffe b = o.at(k, j);
          if (b)
            r.at(i, j) = f_.add(r.at(i, j), f_.mul(a, b));
        }
      }
    return r;
  }

  Mat transpose() const {
    Mat r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        r.at(j, i) = at(i, j);
    return r;
  }

  Mat vstack(const Mat& o) const {
    require(cols_ == o.cols_, "Mat::vstack: column mismatch");
    Mat r(f_, rows_ + o.rows_, cols_);
    std::copy(d_.begin(), d_.end(), r.d_.begin());
    std::copy(o.d_.begin(), o.d_.end(), r.d_.begin() + d_.size());
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

  /// In-place reduced row echelon form; returns pivot column list.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int sel = -1;
      for (int i = r; i < rows_; ++i)
        if (at(i, c)) {
          sel = i;
          break;
        }
      if (sel < 0)
        continue;
      if (sel != r)
        for (int j = 0; j < cols_; ++j)
          std::swap(at(sel, j), at(r, j));
      ffe inv = f_.inv(at(r, c));
      for (int j = 0; j < cols_; ++j)
        at(r, j) = f_.mul(at(r, j), inv);
      for (int i = 0; i < rows_; ++i) {
        if (i == r)
          continue;
        ffe fac = at(i, c);
        if (!fac)
          continue;
        for (int j = 0; j < cols_; ++j)
          at(i, j) = f_.sub(at(i, j), f_.mul(fac, at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat tmp = *this;
    return static_cast<int>(tmp.rref().size());
  }

  /// Basis of the right null space {x : M x = 0}, one solution per row.
  Mat kernel() const {
    Mat R = *this;
    std::vector<int> piv = R.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv)
      is_pivot[c] = true;
    int free_cnt = cols_ - static_cast<int>(piv.size());
    Mat K(f_, free_cnt, cols_);
    int k = 0;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c])
        continue;
      K.at(k, c) = 1;
      for (size_t pr = 0; pr < piv.size(); ++pr)
        K.at(k, piv[pr]) = f_.neg(R.at(static_cast<int>(pr), c));
      ++k;
    }
    return K;
  }

  /// Inverse of a square matrix; throws if singular.
  Mat inverse() const {
    require(rows_ == cols_, "Mat::inverse: not square");
    Mat aug(f_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j)
        aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = 1;
    }
    auto piv = aug.rref();
    require(static_cast<int>(piv.size()) == rows_ && piv[rows_ - 1] == rows_ - 1,
            "Mat::inverse: singular matrix");
    Mat inv(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  /// Characteristic polynomial, monic, returned as coefficients c with
  /// c[i] the coefficient of t^i. Uses the Hessenberg reduction, valid
  /// over any field.
  Vec char_poly() const {
    require(rows_ == cols_, "char_poly: not square");
    int n = rows_;
    if (n == 0)
      return Vec{1};
    Mat H = *this;
    // similarity reduction to upper Hessenberg form
    for (int c = 0; c < n - 2; ++c) {
      int sel = -1;
      for (int i = c + 1; i < n; ++i)
        if (H.at(i, c)) {
          sel = i;
          break;
        }
      if (sel < 0)
        continue;
      if (sel != c + 1) {
        for (int j = 0; j < n; ++j)
          std::swap(H.at(sel, j), H.at(c + 1, j));
        for (int i = 0; i < n; ++i)
          std::swap(H.at(i, sel), H.at(i, c + 1));
      }
      ffe pinv = f_.inv(H.at(c + 1, c));
      for (int i = c + 2; i < n; ++i) {
        ffe fac = f_.mul(H.at(i, c), pinv);
        if (!fac)
          continue;
        // row_i -= fac * row_{c+1}; col_{c+1} += fac * col_i
        for (int j = 0; j < n; ++j)
          H.at(i, j) = f_.sub(H.at(i, j), f_.mul(fac, H.at(c + 1, j)));
        for (int i2 = 0; i2 < n; ++i2)
          H.at(i2, c + 1) = f_.add(H.at(i2, c + 1), f_.mul(fac, H.at(i2, i)));
      }
    }
    // recurrence over leading principal minors of the Hessenberg form
    std::vector<Vec> p(n + 1);
    p[0] = Vec{1};
    for (int k = 1; k <= n; ++k) {
      // p_k = (t - H[k-1][k-1]) p_{k-1} - sum_{m} H[m-1][k-1] (prod subdiag) p_{m-1}
      Vec pk(k + 1, 0);
      const Vec& prev = p[k - 1];
      for (int i = 0; i < k; ++i) {
        pk[i + 1] = f_.add(pk[i + 1], prev[i]);
        pk[i] = f_.sub(pk[i], f_.mul(H.at(k - 1, k - 1), prev[i]));
      }
      ffe run = 1;
      for (int m = k - 1; m >= 1; --m) {
        run = f_.mul(run, H.at(m, m - 1));
        if (!run)
          break;
        ffe coef = f_.mul(run, H.at(m - 1, k - 1));
        if (!coef)
          continue;
        const Vec& pm = p[m - 1];
        for (size_t i = 0; i < pm.size(); ++i)
          pk[i] = f_.sub(pk[i], f_.mul(coef, pm[i]));
      }
      p[k] = std::move(pk);
    }
    return p[n];
  }

private:
  Field f_;
  int rows_, cols_;
  std::vector<ffe> d_;
};

/// Solves x * B = v for a fixed row-independent matrix B, repeatedly.
class RowSolver {
public:
  explicit RowSolver(const Mat& basis_rows) : B_(basis_rows), R_(basis_rows) {
    int k = B_.rows();
    // augment with identity to track the transform: [B | I] -> [R | T]
    Mat aug(B_.field(), k, B_.cols() + k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < B_.cols(); ++j)
        aug.at(i, j) = B_.at(i, j);
      aug.at(i, B_.cols() + i) = 1;
    }
    auto piv = aug.rref();
    require(static_cast<int>(piv.size()) == k, "RowSolver: rows not independent");
    pivots_.clear();
    for (int c : piv) {
      require(c < B_.cols(), "RowSolver: rows not independent");
      pivots_.push_back(c);
    }
    R_ = Mat(B_.field(), k, B_.cols());
    T_ = Mat(B_.field(), k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < B_.cols(); ++j)
        R_.at(i, j) = aug.at(i, j);
      for (int j = 0; j < k; ++j)
        T_.at(i, j) = aug.at(i, B_.cols() + j);
    }
  }

  /// Coordinates of v in the row basis, or nullopt if v is outside the span.
  std::optional<Vec> solve(const Vec& v) const {
    const Field& F = B_.field();
    Vec w = v;
    Vec c(R_.rows(), 0);
    for (int i = 0; i < R_.rows(); ++i) {
      ffe fac = w[pivots_[i]];
      if (!fac)
        continue;
      c[i] = fac;
      for (int j = 0; j < R_.cols(); ++j)
        w[j] = F.sub(w[j], F.mul(fac, R_.at(i, j)));
    }
    if (!is_zero(w))
      return std::nullopt;
    // v = c * R = c * T * B, so coordinates w.r.t. B are c * T
    Vec out(R_.rows(), 0);
    for (int i = 0; i < R_.rows(); ++i)
      if (c[i])
        for (int j = 0; j < R_.rows(); ++j)
          out[j] = F.add(out[j], F.mul(c[i], T_.at(i, j)));
    return out;
  }

  bool contains(const Vec& v) const { return solve(v).has_value(); }

private:
  Mat B_;
  Mat R_;
  Mat T_ = Mat(Field(2, 1), 0, 0);
  std::vector<int> pivots_;
};

} // namespace ebq
