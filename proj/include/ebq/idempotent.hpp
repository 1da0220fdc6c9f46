#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ebq/radical.hpp"

namespace ebq {

/// Monic minimal polynomial of z in A (with respect to A's unit),
/// coefficients ascending.
inline Vec min_poly(const Algebra& A, const Vec& z) {
  const Field& F = A.field();
  int n = A.dim();
  std::vector<Vec> powers = {A.unit()};
  while (true) {
    Mat M = Mat::from_rows(F, powers, n);
    Vec next = A.mul(powers.back(), z);
    RowSolver solver(M);
    if (auto c = solver.solve(next)) {
      // next = sum c_i powers_i  ->  z^k - sum c_i z^i = 0
      Vec mp(powers.size() + 1, 0);
      for (size_t i = 0; i < c->size(); ++i)
        mp[i] = F.neg((*c)[i]);
      mp[powers.size()] = 1;
      return mp;
    }
    powers.push_back(std::move(next));
    require(static_cast<int>(powers.size()) <= n + 1,
            "min_poly: no relation found (broken algebra)");
  }
}

inline ffe eval_poly(const Field& F, const Vec& poly, ffe x) {
  ffe acc = 0;
  for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
    acc = F.add(F.mul(acc, x), poly[i]);
  return acc;
}

inline std::vector<ffe> poly_roots(const Field& F, const Vec& poly) {
  std::vector<ffe> roots;
  for (int x = 0; x < F.q(); ++x)
    if (eval_poly(F, poly, static_cast<ffe>(x)) == 0)
      roots.push_back(static_cast<ffe>(x));
  return roots;
}

/// Newton lift of an idempotent along a nilpotent ideal: iterates
/// e <- 3e^2 - 2e^3, which squares the defect each round, so
/// ceil(log2(nilpotency degree)) + 1 rounds suffice.
inline Vec lift_idempotent(const Algebra& A, const Vec& ebar, const Subspace& J) {
  const Field& F = A.field();
  Vec defect = vec_sub(F, A.mul(ebar, ebar), ebar);
  require(J.contains(defect), "lift_idempotent: e^2 - e does not lie in J");
  int d = nilpotency_degree(A, J);
  int iters = 1;
  while ((1 << iters) < d)
    ++iters;
  ++iters;
  Vec e = ebar;
  for (int it = 0; it < iters && !A.is_idempotent(e); ++it) {
    Vec e2 = A.mul(e, e);
    Vec e3 = A.mul(e2, e);
    Vec three_e2 = vec_add(F, vec_add(F, e2, e2), e2);
    Vec two_e3 = vec_add(F, e3, e3);
    e = vec_sub(F, three_e2, two_e3);
  }
  require(A.is_idempotent(e), "lift_idempotent: iteration failed to stabilize");
  require(J.contains(vec_sub(F, e, ebar)),
          "lift_idempotent: lift is not congruent to the input mod J");
  return e;
}

namespace detail {

/// Lagrange idempotents of z inside A when the minimal polynomial of z
/// splits into distinct linear factors; returns {} if it does not.
inline std::vector<Vec> eigen_idempotents(const Algebra& A, const Vec& z) {
  const Field& F = A.field();
  Vec mp = min_poly(A, z);
  std::vector<ffe> roots = poly_roots(F, mp);
  if (roots.size() != mp.size() - 1 || roots.size() < 2)
    return {};
  std::vector<Vec> out;
  for (ffe lam : roots) {
    Vec e = A.unit();
    for (ffe mu : roots) {
      if (mu == lam)
        continue;
      Vec factor = vec_sub(F, z, scaled(F, A.unit(), mu));
      e = A.mul(e, factor);
      e = scaled(F, e, F.inv(F.sub(lam, mu)));
    }
    require(A.is_idempotent(e), "eigen_idempotents: projector not idempotent");
    out.push_back(std::move(e));
  }
  return out;
}

/// Corner subalgebra e*A*e with unit e.
inline SubAlgebra corner(AlgebraPtr A, const Vec& e) {
  std::vector<Vec> rows;
  for (int i = 0; i < A->dim(); ++i)
    rows.push_back(A->mul(A->mul(e, A->basis_vec(i)), e));
  Mat span = Mat::from_rows(A->field(), rows, A->dim());
  return make_subalgebra(A, span, e);
}

/// Primitive idempotents of a commutative split semisimple algebra,
/// found by refining along the basis; the count must reach dim.
inline std::vector<Vec> split_commutative(AlgebraPtr Z) {
  std::vector<Vec> idems = {Z->unit()};
  for (int b = 0; b < Z->dim() && static_cast<int>(idems.size()) < Z->dim(); ++b) {
    std::vector<Vec> next;
    for (const Vec& e : idems) {
      SubAlgebra C = corner(Z, e);
      if (C.alg.dim() == 1) {
        next.push_back(e);
        continue;
      }
      Vec zc = C.to_sub(Z->mul(e, Z->basis_vec(b)));
      std::vector<Vec> pieces = eigen_idempotents(C.alg, zc);
      if (pieces.empty()) {
        next.push_back(e);
      } else {
        for (const Vec& pc : pieces)
          next.push_back(C.to_ambient(pc));
      }
    }
    idems = std::move(next);
  }
  require(static_cast<int>(idems.size()) == Z->dim(),
          "split_commutative: center did not split into " +
              std::to_string(Z->dim()) + " one-dimensional pieces; "
              "the coefficient field is not a splitting field");
  std::sort(idems.begin(), idems.end());
  return idems;
}

} // namespace detail

/// Orthogonal lift of a list of idempotents of A/J that are pairwise
/// orthogonal and sum to the unit; output has the same properties in A.
inline std::vector<Vec> lift_orthogonal_family(const Algebra& A, const Subspace& J,
                                               const QuotientAlgebra& Q,
                                               const std::vector<Vec>& family) {
  const Field& F = A.field();
  std::vector<Vec> lifted;
  Vec s(A.dim(), 0); // running sum, idempotent
  for (size_t i = 0; i + 1 < family.size(); ++i) {
    Vec pre = Q.lift(family[i]);
    Vec one_minus_s = vec_sub(F, A.unit(), s);
    Vec w = A.mul(A.mul(one_minus_s, pre), one_minus_s);
    Vec e = lift_idempotent(A, w, J);
    lifted.push_back(e);
    s = vec_add(F, s, e);
    require(A.is_idempotent(s), "lift_orthogonal_family: partial sum broke");
  }
  Vec last = vec_sub(F, A.unit(), s);
  require(A.is_idempotent(last), "lift_orthogonal_family: final complement");
  if (!family.empty()) {
    require(Q.project(last) == family.back(),
            "lift_orthogonal_family: last lift is not congruent mod J");
    lifted.push_back(last);
  }
  for (size_t i = 0; i < lifted.size(); ++i)
    for (size_t j = i + 1; j < lifted.size(); ++j) {
      require(is_zero(A.mul(lifted[i], lifted[j])) &&
                  is_zero(A.mul(lifted[j], lifted[i])),
              "lift_orthogonal_family: lifts are not orthogonal");
    }
  return lifted;
}

struct WedderburnData {
  Subspace radical;
  QuotientAlgebra quotient;                 // A/J
  std::vector<Vec> central_idempotents;     // in A/J coordinates, sorted
  std::vector<Vec> lifted;                  // orthogonal idempotents of A
};

/// Central primitive idempotents of A/J, lifted to an orthogonal family
/// of idempotents of A summing to 1.
inline WedderburnData wedderburn_components(AlgebraPtr A) {
  Subspace J = jacobson_radical(*A);
  QuotientAlgebra Q = quotient_by_ideal(A, J);
  auto Sptr = std::make_shared<Algebra>(Q.alg);
  SubAlgebra Z = center_subalgebra(Sptr);
  auto Zptr = std::make_shared<Algebra>(Z.alg);
  std::vector<Vec> z_idems = detail::split_commutative(Zptr);
  std::vector<Vec> s_idems;
  for (const Vec& e : z_idems)
    s_idems.push_back(Z.to_ambient(e));
  std::sort(s_idems.begin(), s_idems.end());
  std::vector<Vec> lifted = lift_orthogonal_family(*A, J, Q, s_idems);
  return WedderburnData{std::move(J), std::move(Q), std::move(s_idems),
                        std::move(lifted)};
}

struct PointData {
  int point_id = 0;       // Wedderburn component index
  Vec rep;                // primitive idempotent of A, exact
  int block_dim = 0;      // dim of the component ideal of A/J
  int matrix_rank = 0;    // n_i with component = M_{n_i}(k)
};

/// One lifted primitive idempotent per Wedderburn component of A/J.
/// Inside each component the refinement walks down corners using
/// eigen-idempotents of deterministic candidates (basis, basis pairs)
/// and then seeded random elements, within a bounded retry budget.
inline std::vector<PointData> primitive_decomposition(AlgebraPtr A,
                                                      std::uint64_t seed = 0,
                                                      int retry_budget = 64) {
  WedderburnData wd = wedderburn_components(A);
  auto Sptr = std::make_shared<Algebra>(wd.quotient.alg);
  const Field& F = Sptr->field();
  std::vector<PointData> out;
  int total_component_dim = 0;
  for (size_t ci = 0; ci < wd.central_idempotents.size(); ++ci) {
    const Vec& block = wd.central_idempotents[ci];
    // component dimension: dim of block * S
    std::vector<Vec> ideal_rows;
    for (int i = 0; i < Sptr->dim(); ++i)
      ideal_rows.push_back(Sptr->mul(block, Sptr->basis_vec(i)));
    int comp_dim = Mat::from_rows(F, ideal_rows, Sptr->dim()).rank();
    total_component_dim += comp_dim;

    Vec f = block;
    while (true) {
      SubAlgebra C = detail::corner(Sptr, f);
      int cd = C.alg.dim();
      if (cd == 1)
        break;
      bool split = false;
      int tried = 0;
      Rng rng(seed + ci * 7919);
      // deterministic candidates first, then seeded draws
      std::vector<Vec> candidates;
      for (int i = 0; i < cd; ++i)
        candidates.push_back(C.alg.basis_vec(i));
      for (int i = 0; i < cd && !split; ++i)
        for (int j = i + 1; j < cd; ++j)
          candidates.push_back(
              vec_add(F, C.alg.basis_vec(i), C.alg.basis_vec(j)));
      for (const Vec& z : candidates) {
        if (tried++ >= retry_budget)
          break;
        auto pieces = detail::eigen_idempotents(C.alg, z);
        if (!pieces.empty()) {
          std::sort(pieces.begin(), pieces.end());
          f = C.to_ambient(pieces.front());
          split = true;
          break;
        }
      }
      while (!split && tried < retry_budget) {
        ++tried;
        Vec z(cd);
        for (auto& x : z)
          x = static_cast<ffe>(rng.below(F.q()));
        auto pieces = detail::eigen_idempotents(C.alg, z);
        if (!pieces.empty()) {
          std::sort(pieces.begin(), pieces.end());
          f = C.to_ambient(pieces.front());
          split = true;
        }
      }
      require(split, "primitive_decomposition: retry budget exhausted while "
                     "splitting a corner (is the field a splitting field?)");
    }
    // rank-1 certificate and matrix rank of the component
    int n_i = 0;
    while (n_i * n_i < comp_dim)
      ++n_i;
    require(n_i * n_i == comp_dim,
            "primitive_decomposition: component dimension is not a square; "
            "field is not a splitting field");
    require(is_zero(vec_sub(F, Sptr->mul(block, f), f)),
            "primitive_decomposition: refinement left its component");
    PointData pd;
    pd.point_id = static_cast<int>(ci);
    pd.block_dim = comp_dim;
    pd.matrix_rank = n_i;
    pd.rep = lift_idempotent(*A, wd.quotient.lift(f), wd.radical);
    out.push_back(std::move(pd));
  }
  require(total_component_dim == Sptr->dim(),
          "primitive_decomposition: components do not fill the quotient");
  return out;
}

} // namespace ebq
