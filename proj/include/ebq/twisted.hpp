#pragma once

#include <utility>
#include <vector>

#include "ebq/interior.hpp"

namespace ebq {

/// Matrix of the twisted diagonal action of u through phi:
/// a -> alpha(phi(u) u^{-1}) * (u a). Requires phi(u)u^{-1} in N.
inline Mat twisted_action_matrix(const NInteriorGAlgebra& A,
                                 const GroupAutomorphism& phi, int u) {
  const GroupPtr& G = A.group().parent();
  int n = G->mul(phi.map(u), G->inv(u));
  require(A.normal().contains(n),
          "twisted_action: phi(u)u^{-1} is not in N (phi is outside K)");
  return A.algebra().left_mult(A.alpha(n)).mul(A.phi(u));
}

/// Fixed space of the twisted action of a subgroup R <= domain(phi).
struct TwistedFixedSpace {
  GroupAutomorphism phi;
  Subgroup R;
  Subspace space;
};

inline TwistedFixedSpace twisted_fixed_points(const NInteriorGAlgebra& A,
                                              const GroupAutomorphism& phi,
                                              const Subgroup& R) {
  require(phi.domain().contains(R), "twisted_fixed_points: R not inside P");
  const Field& F = A.field();
  int dim = A.dim();
  std::vector<int> gens = R.generator_indices();
  if (gens.empty())
    return {phi, R, Subspace::span(Mat::identity(F, dim))};
  Mat stacked(F, 0, dim);
  for (int u : gens) {
    Mat D = twisted_action_matrix(A, phi, u);
    for (int i = 0; i < dim; ++i)
      D.at(i, i) = F.sub(D.at(i, i), 1);
    stacked = stacked.vstack(D);
  }
  return {phi, R, Subspace::span(stacked.kernel())};
}

/// Twisted relative trace from R to P = domain(phi): the sum of the
/// images of `a` under representatives of the twisted-diagonal cosets,
/// taken as {(phi(u), u)} for u over a left transversal of P/R.
inline Vec twisted_trace(const NInteriorGAlgebra& A, const GroupAutomorphism& phi,
                         const Subgroup& R, const Vec& a) {
  const Subgroup& P = phi.domain();
  require(P.contains(R), "twisted_trace: R not inside P");
  for (int u : R.generator_indices())
    require(twisted_action_matrix(A, phi, u).apply(a) == a,
            "twisted_trace: argument is not R-fixed");
  const Field& F = A.field();
  Vec r(A.dim(), 0);
  for (int u : coset_reps(P, R, CosetSide::Left))
    r = vec_add(F, r, twisted_action_matrix(A, phi, u).apply(a));
  return r;
}

/// Image subspace of the twisted trace from R.
inline Subspace twisted_trace_image(const NInteriorGAlgebra& A,
                                    const GroupAutomorphism& phi,
                                    const Subgroup& R) {
  TwistedFixedSpace fr = twisted_fixed_points(A, phi, R);
  const Subgroup& P = phi.domain();
  const Field& F = A.field();
  std::vector<int> reps = coset_reps(P, R, CosetSide::Left);
  std::vector<Mat> mats;
  for (int u : reps)
    mats.push_back(twisted_action_matrix(A, phi, u));
  std::vector<Vec> rows;
  for (int i = 0; i < fr.space.dim(); ++i) {
    Vec a = fr.space.basis().row(i);
    Vec acc(A.dim(), 0);
    for (const Mat& M : mats)
      acc = vec_add(F, acc, M.apply(a));
    rows.push_back(std::move(acc));
  }
  return Subspace::span(F, rows, A.dim());
}

} // namespace ebq
