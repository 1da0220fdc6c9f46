#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ebq/algebra.hpp"
#include "ebq/automorphism.hpp"

namespace ebq {

/// Linear action of a subgroup on an algebra by algebra automorphisms,
/// one matrix per group element.
class ActionOnAlgebra {
public:
  ActionOnAlgebra(AlgebraPtr alg, Subgroup grp, std::vector<Mat> mats)
      : alg_(std::move(alg)), grp_(std::move(grp)), mats_(std::move(mats)) {
    require(mats_.size() == grp_.members().size(),
            "ActionOnAlgebra: one matrix per member required");
  }

  static ActionOnAlgebra from_function(AlgebraPtr alg, const Subgroup& grp,
                                       const std::function<Vec(int, const Vec&)>& act) {
    int n = alg->dim();
    const Field& F = alg->field();
    std::vector<Mat> mats;
    mats.reserve(grp.members().size());
    for (int g : grp.members()) {
      Mat m(F, n, n);
      for (int j = 0; j < n; ++j) {
        Vec img = act(g, alg->basis_vec(j));
        for (int i = 0; i < n; ++i)
          m.at(i, j) = img[i];
      }
      mats.push_back(std::move(m));
    }
    return ActionOnAlgebra(std::move(alg), grp, std::move(mats));
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const Subgroup& group() const { return grp_; }

  const Mat& matrix_of(int parent_index) const {
    return mats_[grp_.position_of(parent_index)];
  }

  Vec apply(int parent_index, const Vec& v) const {
    return matrix_of(parent_index).apply(v);
  }

  ActionOnAlgebra restricted(const Subgroup& sub) const {
    require(grp_.contains(sub), "ActionOnAlgebra: restriction to non-subgroup");
    std::vector<Mat> mats;
    mats.reserve(sub.members().size());
    for (int g : sub.members())
      mats.push_back(matrix_of(g));
    return ActionOnAlgebra(alg_, sub, std::move(mats));
  }

  /// Automorphism and homomorphism checks: every matrix fixes the unit
  /// and is multiplicative on sampled basis pairs; matrices of products
  /// of generators with sampled elements compose correctly.
  void validate(int samples = 50, std::uint64_t seed = 1) const {
    const Field& F = alg_->field();
    int n = alg_->dim();
    Rng rng(seed);
    for (int g : grp_.members()) {
      const Mat& M = matrix_of(g);
      require(M.apply(alg_->unit()) == alg_->unit(),
              "ActionOnAlgebra: unit not preserved");
      for (int s = 0; s < samples; ++s) {
        int i = static_cast<int>(rng.below(n));
        int j = static_cast<int>(rng.below(n));
        Vec lhs = M.apply(alg_->mul(alg_->basis_vec(i), alg_->basis_vec(j)));
        Vec rhs = alg_->mul(M.apply(alg_->basis_vec(i)), M.apply(alg_->basis_vec(j)));
        require(lhs == rhs, "ActionOnAlgebra: matrix is not an algebra map");
      }
    }
    const GroupPtr& G = grp_.parent();
    std::vector<int> gens = grp_.generator_indices();
    for (int g : gens)
      for (int s = 0; s < samples; ++s) {
        int h = grp_.members()[rng.below(grp_.members().size())];
        Vec v(n);
        for (auto& x : v)
          x = static_cast<ffe>(rng.below(F.q()));
        Vec lhs = apply(G->mul(g, h), v);
        Vec rhs = apply(g, apply(h, v));
        require(lhs == rhs, "ActionOnAlgebra: not a homomorphism");
      }
  }

private:
  AlgebraPtr alg_;
  Subgroup grp_;
  std::vector<Mat> mats_;
};

/// Fixed-point subalgebra of an action: kernel of (M_g - 1) over a
/// generating set, returned with induced structure constants.
inline SubAlgebra fixed_points(const ActionOnAlgebra& act) {
  const Algebra& A = *act.algebra();
  const Field& F = A.field();
  int n = A.dim();
  std::vector<int> gens = act.group().generator_indices();
  if (gens.empty()) {
    return make_subalgebra(act.algebra(), Mat::identity(F, n), A.unit());
  }
  Mat stacked(F, 0, n);
  for (int g : gens) {
    Mat D = act.matrix_of(g);
    for (int i = 0; i < n; ++i)
      D.at(i, i) = F.sub(D.at(i, i), 1);
    stacked = stacked.vstack(D);
  }
  Mat K = stacked.kernel();
  return make_subalgebra(act.algebra(), K, A.unit());
}

/// Relative trace Tr_Q^H(a) = sum over left coset representatives of
/// H/Q of the action; a must be Q-fixed, the result is H-fixed.
inline Vec relative_trace(const ActionOnAlgebra& act, const Subgroup& Q,
                          const Subgroup& H, const Vec& a) {
  require(H.contains(Q), "relative_trace: Q not contained in H");
  for (int g : Q.generator_indices())
    require(act.apply(g, a) == a, "relative_trace: argument is not Q-fixed");
  const Field& F = act.algebra()->field();
  Vec r(act.algebra()->dim(), 0);
  for (int h : coset_reps(H, Q, CosetSide::Left))
    r = vec_add(F, r, act.apply(h, a));
  return r;
}

/// Image subspace Tr_Q^H(A^Q) inside A^H; verified to be an ideal of A^H.
inline Subspace trace_image(const ActionOnAlgebra& act, const Subgroup& Q,
                            const Subgroup& H, bool check_ideal = true) {
  const Algebra& A = *act.algebra();
  const Field& F = A.field();
  SubAlgebra AQ = fixed_points(act.restricted(Q));
  std::vector<int> reps = coset_reps(H, Q, CosetSide::Left);
  std::vector<Vec> images;
  for (int i = 0; i < AQ.basis.rows(); ++i) {
    Vec a = AQ.basis.row(i);
    Vec r(A.dim(), 0);
    for (int h : reps)
      r = vec_add(F, r, act.apply(h, a));
    images.push_back(std::move(r));
  }
  Subspace img = Subspace::span(F, images, A.dim());
  if (check_ideal) {
    SubAlgebra AH = fixed_points(act.restricted(H));
    for (int i = 0; i < img.dim(); ++i)
      for (int j = 0; j < AH.basis.rows(); ++j) {
        Vec left = A.mul(AH.basis.row(j), img.basis().row(i));
        Vec right = A.mul(img.basis().row(i), AH.basis.row(j));
        require(img.contains(left) && img.contains(right),
                "trace_image: image is not an ideal of A^H");
      }
  }
  return img;
}

} // namespace ebq
