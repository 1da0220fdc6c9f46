#pragma once

#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "ebq/group.hpp"
#include "ebq/subspace.hpp"

namespace ebq {

/// Finite-dimensional associative unital algebra given by structure
/// constants: e_i e_j = sum_k sc(i,j,k) e_k.
class Algebra {
public:
  Algebra(Field f, int dim, std::vector<ffe> sc, Vec unit)
      : f_(std::move(f)), dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)) {
    require(sc_.size() == static_cast<size_t>(dim_) * dim_ * dim_,
            "Algebra: structure constant tensor size mismatch");
    require(unit_.size() == static_cast<size_t>(dim_), "Algebra: unit size mismatch");
    check_unit();
  }

  const Field& field() const { return f_; }
  int dim() const { return dim_; }
  const Vec& unit() const { return unit_; }

  ffe sc(int i, int j, int k) const {
    return sc_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  ffe& sc_mut(int i, int j, int k) {
    return sc_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec r(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
      if (!a[i])
        continue;
      for (int j = 0; j < dim_; ++j) {
        if (!b[j])
          continue;
        ffe c = f_.mul(a[i], b[j]);
        const ffe* row = &sc_[(static_cast<size_t>(i) * dim_ + j) * dim_];
        for (int k = 0; k < dim_; ++k)
          if (row[k])
            r[k] = f_.add(r[k], f_.mul(c, row[k]));
      }
    }
    return r;
  }

  Vec basis_vec(int i) const {
    Vec v(dim_, 0);
    v[i] = 1;
    return v;
  }

  /// Matrix of left multiplication by a (columns = a * e_j).
  Mat left_mult(const Vec& a) const {
    Mat m(f_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (!a[i])
        continue;
      for (int j = 0; j < dim_; ++j) {
        const ffe* row = &sc_[(static_cast<size_t>(i) * dim_ + j) * dim_];
        for (int k = 0; k < dim_; ++k)
          if (row[k])
            m.at(k, j) = f_.add(m.at(k, j), f_.mul(a[i], row[k]));
      }
    }
    return m;
  }

  Mat right_mult(const Vec& a) const {
    Mat m(f_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      if (!a[j])
        continue;
      for (int i = 0; i < dim_; ++i) {
        const ffe* row = &sc_[(static_cast<size_t>(i) * dim_ + j) * dim_];
        for (int k = 0; k < dim_; ++k)
          if (row[k])
            m.at(k, i) = f_.add(m.at(k, i), f_.mul(a[j], row[k]));
      }
    }
    return m;
  }

  Vec pow(const Vec& a, long k) const {
    Vec r = unit_;
    Vec base = a;
    while (k > 0) {
      if (k & 1)
        r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  bool is_idempotent(const Vec& e) const { return mul(e, e) == e; }

  /// Associativity on basis triples: exhaustive when dim <= exhaustive_cap,
  /// otherwise `samples` random triples.
  bool associativity_holds(int exhaustive_cap = 60, int samples = 1000,
                           std::uint64_t seed = 0) const {
    auto check = [&](int i, int j, int k) {
      Vec left = mul(mul(basis_vec(i), basis_vec(j)), basis_vec(k));
      Vec right = mul(basis_vec(i), mul(basis_vec(j), basis_vec(k)));
      return left == right;
    };
    if (dim_ <= exhaustive_cap) {
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          for (int k = 0; k < dim_; ++k)
            if (!check(i, j, k))
              return false;
      return true;
    }
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
      int i = static_cast<int>(rng.below(dim_));
      int j = static_cast<int>(rng.below(dim_));
      int k = static_cast<int>(rng.below(dim_));
      if (!check(i, j, k))
        return false;
    }
    return true;
  }

private:
  void check_unit() const {
    for (int i = 0; i < dim_; ++i) {
      Vec e = basis_vec(i);
      require(mul(unit_, e) == e && mul(e, unit_) == e,
              "Algebra: unit is not a two-sided identity");
    }
  }

  Field f_;
  int dim_;
  std::vector<ffe> sc_;
  Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Group algebra kH with basis indexed by H's members in enumeration
/// order.
inline Algebra group_algebra(const Subgroup& H, const Field& F) {
  int n = H.order();
  const GroupPtr& G = H.parent();
  std::vector<ffe> sc(static_cast<size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = H.position_of(G->mul(H.members()[i], H.members()[j]));
      sc[(static_cast<size_t>(i) * n + j) * n + k] = 1;
    }
  Vec unit(n, 0);
  unit[0] = 1; // identity is always the first member
  return Algebra(F, n, std::move(sc), std::move(unit));
}

/// Subalgebra presented by an independent row basis of the ambient
/// algebra, closed under the product, with a designated unit.
struct SubAlgebra {
  AlgebraPtr ambient;
  Mat basis;    // rows: basis vectors in ambient coordinates
  Algebra alg;  // induced structure constants
  RowSolver solver;

  Vec to_ambient(const Vec& sub_coords) const {
    Vec r(ambient->dim(), 0);
    for (int i = 0; i < basis.rows(); ++i)
      if (sub_coords[i])
        axpy(ambient->field(), r, sub_coords[i], basis.row(i));
    return r;
  }

  Vec to_sub(const Vec& ambient_vec) const {
    auto c = solver.solve(ambient_vec);
    require(c.has_value(), "SubAlgebra: vector outside the subalgebra");
    return *c;
  }
};

/// Builds a subalgebra from spanning rows; rows are canonicalized, the
/// product closure is verified, and `unit_ambient` must lie in the span.
inline SubAlgebra make_subalgebra(AlgebraPtr A, const Mat& span_rows,
                                  const Vec& unit_ambient) {
  Subspace S = Subspace::span(span_rows);
  Mat B = S.basis();
  int k = B.rows();
  RowSolver solver(B);
  const Field& F = A->field();
  std::vector<ffe> sc(static_cast<size_t>(k) * k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec prod = A->mul(B.row(i), B.row(j));
      auto c = solver.solve(prod);
      require(c.has_value(), "make_subalgebra: span is not closed under product");
      for (int t = 0; t < k; ++t)
        sc[(static_cast<size_t>(i) * k + j) * k + t] = (*c)[t];
    }
  auto cu = solver.solve(unit_ambient);
  require(cu.has_value(), "make_subalgebra: unit not inside the span");
  Algebra alg(F, k, std::move(sc), *cu);
  return SubAlgebra{std::move(A), std::move(B), std::move(alg), std::move(solver)};
}

/// Quotient A / J by a two-sided ideal: complement representatives are
/// the first standard basis vectors independent modulo J.
struct QuotientAlgebra {
  AlgebraPtr ambient;
  Subspace ideal;
  Mat reps; // rows: ambient representatives of the quotient basis
  Algebra alg;
  RowSolver full_solver; // rows of [ideal; reps]

  /// Class of an ambient vector in quotient coordinates.
  Vec project(const Vec& v) const {
    auto c = full_solver.solve(v);
    require(c.has_value(), "QuotientAlgebra: vector outside ambient span");
    return Vec(c->begin() + ideal.dim(), c->end());
  }

  Vec lift(const Vec& q) const {
    Vec r(ambient->dim(), 0);
    for (int i = 0; i < reps.rows(); ++i)
      if (q[i])
        axpy(ambient->field(), r, q[i], reps.row(i));
    return r;
  }
};

inline QuotientAlgebra quotient_by_ideal(AlgebraPtr A, const Subspace& J) {
  const Field& F = A->field();
  int n = A->dim();
  // choose standard basis vectors completing J to the full space
  std::vector<Vec> chosen;
  Mat acc = J.basis();
  for (int i = 0; i < n && acc.rows() < n; ++i) {
    Mat trial = acc.vstack(Mat::from_rows(F, {A->basis_vec(i)}, n));
    if (trial.rank() == acc.rows() + 1) {
      chosen.push_back(A->basis_vec(i));
      acc = std::move(trial);
    }
  }
  require(J.dim() + static_cast<int>(chosen.size()) == n,
          "quotient_by_ideal: complement completion failed");
  Mat reps = Mat::from_rows(F, chosen, n);
  RowSolver solver(J.basis().vstack(reps));
  int k = reps.rows();
  auto project = [&](const Vec& v) {
    auto c = solver.solve(v);
    require(c.has_value(), "quotient_by_ideal: projection failed");
    return Vec(c->begin() + J.dim(), c->end());
  };
  std::vector<ffe> sc(static_cast<size_t>(k) * k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec q = project(A->mul(reps.row(i), reps.row(j)));
      for (int t = 0; t < k; ++t)
        sc[(static_cast<size_t>(i) * k + j) * k + t] = q[t];
    }
  Vec qu = project(A->unit());
  Algebra alg(F, k, std::move(sc), std::move(qu));
  return QuotientAlgebra{std::move(A), J, std::move(reps), std::move(alg),
                         std::move(solver)};
}

/// Center of A as a subspace.
inline Subspace center_subspace(const Algebra& A) {
  const Field& F = A.field();
  int n = A.dim();
  Mat stacked(F, 0, n);
  for (int i = 0; i < n; ++i) {
    Vec e = A.basis_vec(i);
    Mat L = A.left_mult(e);
    Mat R = A.right_mult(e);
    Mat D(F, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        D.at(r, c) = F.sub(L.at(r, c), R.at(r, c));
    stacked = stacked.vstack(D);
  }
  return Subspace::span(stacked.kernel());
}

inline SubAlgebra center_subalgebra(AlgebraPtr A) {
  Subspace Z = center_subspace(*A);
  Vec unit = A->unit();
  return make_subalgebra(std::move(A), Z.basis(), unit);
}

/// Smallest e such that GF(p^e) is a splitting field for kH for every
/// subgroup H of G: the multiplicative order of p modulo the p'-part of
/// the exponent of G.
inline int splitting_degree(const FiniteGroup& G, int p) {
  long ex = G.exponent();
  while (ex % p == 0)
    ex /= p;
  if (ex == 1)
    return 1;
  long r = p % ex;
  int e = 1;
  while (r != 1) {
    r = (r * p) % ex;
    ++e;
  }
  return e;
}

} // namespace ebq
