#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ebq/action.hpp"

namespace ebq {

/// Basis stability data: the group action and both one-sided unit-map
/// multiplications permute the distinguished basis.
struct StableBasis {
  std::vector<std::vector<int>> g_perm;   // aligned with G members
  std::vector<std::vector<int>> left_n;   // aligned with N members
  std::vector<std::vector<int>> right_n;  // aligned with N members
};

/// Algebra A with a unit map alpha : N -> A^x and an action
/// phi : G -> Aut(A) such that N acts by inner automorphisms through
/// alpha and phi(g) alpha(n) = alpha(g n g^{-1}).
class NInteriorGAlgebra {
public:
  NInteriorGAlgebra(AlgebraPtr alg, Subgroup G, Subgroup N,
                    std::vector<Vec> alpha, std::vector<Mat> phi)
      : alg_(std::move(alg)), G_(std::move(G)), N_(std::move(N)),
        alpha_(std::move(alpha)), phi_(std::move(phi)) {
    require(G_.contains(N_), "NInteriorGAlgebra: N must be contained in G");
    require(alpha_.size() == N_.members().size(), "NInteriorGAlgebra: alpha size");
    require(phi_.size() == G_.members().size(), "NInteriorGAlgebra: phi size");
    detect_stable_basis();
  }

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Subgroup& group() const { return G_; }
  const Subgroup& normal() const { return N_; }
  const Field& field() const { return alg_->field(); }
  int dim() const { return alg_->dim(); }

  const Vec& alpha(int n_parent_idx) const {
    return alpha_[N_.position_of(n_parent_idx)];
  }

  Vec alpha_inv(int n_parent_idx) const {
    return alpha(N_.parent()->inv(n_parent_idx));
  }

  const Mat& phi(int g_parent_idx) const {
    return phi_[G_.position_of(g_parent_idx)];
  }

  bool has_stable_basis() const { return stable_.has_value(); }
  const StableBasis& stable_basis() const {
    require(stable_.has_value(), "NInteriorGAlgebra: no stable basis");
    return *stable_;
  }

  /// Conjugation action of a subgroup H <= G through phi.
  ActionOnAlgebra conjugation_action(const Subgroup& H) const {
    require(G_.contains(H), "conjugation_action: H is not inside G");
    std::vector<Mat> mats;
    for (int h : H.members())
      mats.push_back(phi(h));
    return ActionOnAlgebra(alg_, H, std::move(mats));
  }

  /// Forgetful restriction to a smaller acting group containing N.
  std::shared_ptr<const NInteriorGAlgebra> restrict_group(const Subgroup& L) const {
    require(G_.contains(L) && L.contains(N_),
            "restrict_group: need N <= L <= G");
    std::vector<Mat> phis;
    for (int l : L.members())
      phis.push_back(phi(l));
    return std::make_shared<NInteriorGAlgebra>(alg_, L, N_, alpha_, phis);
  }

  /// Full invariant battery. Heavier than construction-time checks; run
  /// from tests and the scenario `invariants` check.
  void validate() const {
    const GroupPtr& P = G_.parent();
    const auto& nm = N_.members();
    // alpha is multiplicative with alpha(1) = 1
    require(alpha(0) == alg_->unit(), "validate: alpha(1) != 1");
    for (int a : nm)
      for (int b : nm) {
        Vec lhs = alpha(P->mul(a, b));
        Vec rhs = alg_->mul(alpha(a), alpha(b));
        require(lhs == rhs, "validate: alpha not multiplicative");
      }
    // phi is a homomorphism (generators against all members)
    for (int g : G_.generator_indices())
      for (int h : G_.members()) {
        Mat lhs = phi(P->mul(g, h));
        Mat rhs = phi(g).mul(phi(h));
        require(lhs == rhs, "validate: phi not a homomorphism");
      }
    // each phi(g) is an algebra automorphism
    conjugation_action(G_).validate();
    // N acts by inner automorphisms through alpha
    for (int n : nm) {
      Mat inner = alg_->left_mult(alpha(n)).mul(alg_->right_mult(alpha_inv(n)));
      require(inner == phi(n), "validate: phi(n) is not conjugation by alpha(n)");
    }
    // compatibility phi(g)(alpha(n)) = alpha(g n g^{-1})
    for (int g : G_.members())
      for (int n : nm) {
        Vec lhs = phi(g).apply(alpha(n));
        Vec rhs = alpha(P->conj(g, n));
        require(lhs == rhs, "validate: phi/alpha compatibility fails");
      }
  }

private:
  static std::optional<std::vector<int>> as_permutation(const Mat& M) {
    std::vector<int> perm(M.cols(), -1);
    for (int j = 0; j < M.cols(); ++j) {
      int hit = -1;
      for (int i = 0; i < M.rows(); ++i) {
        if (M.at(i, j) == 0)
          continue;
        if (M.at(i, j) != 1 || hit >= 0)
          return std::nullopt;
        hit = i;
      }
      if (hit < 0)
        return std::nullopt;
      perm[j] = hit;
    }
    return perm;
  }

  void detect_stable_basis() {
    StableBasis sb;
    for (const Mat& M : phi_) {
      auto p = as_permutation(M);
      if (!p)
        return;
      sb.g_perm.push_back(std::move(*p));
    }
    for (const Vec& a : alpha_) {
      auto l = as_permutation(alg_->left_mult(a));
      auto r = as_permutation(alg_->right_mult(a));
      if (!l || !r)
        return;
      sb.left_n.push_back(std::move(*l));
      sb.right_n.push_back(std::move(*r));
    }
    stable_ = std::move(sb);
  }

  AlgebraPtr alg_;
  Subgroup G_;
  Subgroup N_;
  std::vector<Vec> alpha_;
  std::vector<Mat> phi_;
  std::optional<StableBasis> stable_;
};

using InteriorPtr = std::shared_ptr<const NInteriorGAlgebra>;

/// kN as an N-interior G-algebra: alpha embeds the group basis, phi(g)
/// permutes it by conjugation.
inline InteriorPtr make_kN_interior(const Subgroup& G, const Subgroup& N,
                                    const Field& F) {
  require(N.is_normal_in(G), "make_kN_interior: N is not normal in G");
  auto A = std::make_shared<Algebra>(group_algebra(N, F));
  int dim = N.order();
  const GroupPtr& P = G.parent();
  std::vector<Vec> alpha;
  for (int i = 0; i < dim; ++i)
    alpha.push_back(A->basis_vec(i));
  std::vector<Mat> phi;
  for (int g : G.members()) {
    Mat M(F, dim, dim);
    for (int j = 0; j < dim; ++j) {
      int img = P->conj(g, N.members()[j]);
      M.at(N.position_of(img), j) = 1;
    }
    phi.push_back(std::move(M));
  }
  return std::make_shared<NInteriorGAlgebra>(A, G, N, std::move(alpha),
                                             std::move(phi));
}

/// Crossed product A (x)_N L on basis {a_i (x) x_r} for a right
/// transversal L = union of N x_r, with
/// (a (x) x)(b (x) y) = a phi(x)(b) (x) xy and a (x) n z = a alpha(n) (x) z.
/// The result is an N-interior L-algebra via sigma(l) = 1 (x) l.
inline InteriorPtr crossed_product(const InteriorPtr& Aint, const Subgroup& L) {
  const Subgroup& N = Aint->normal();
  const Subgroup& G = Aint->group();
  require(G.contains(L) && L.contains(N), "crossed_product: need N <= L <= G");
  const GroupPtr& P = L.parent();
  const Field& F = Aint->field();
  const Algebra& A = Aint->algebra();
  int da = A.dim();
  std::vector<int> reps = coset_reps(L, N, CosetSide::Right);
  int R = static_cast<int>(reps.size());
  int dim = da * R;

  // coset lookup: for l in L, l = n * x_t
  std::vector<int> rep_of(P->order(), -1), n_of(P->order(), -1);
  for (int t = 0; t < R; ++t)
    for (int n : N.members()) {
      int l = P->mul(n, reps[t]);
      rep_of[l] = t;
      n_of[l] = n;
    }

  auto basis_index = [da](int i, int r) { return r * da + i; };

  std::vector<ffe> sc(static_cast<size_t>(dim) * dim * dim, 0);
  for (int r = 0; r < R; ++r) {
    for (int s = 0; s < R; ++s) {
      int xy = P->mul(reps[r], reps[s]);
      int t = rep_of[xy];
      int n = n_of[xy];
      const Vec& an = Aint->alpha(n);
      for (int j = 0; j < da; ++j) {
        Vec xb = Aint->phi(reps[r]).apply(A.basis_vec(j));
        Vec xb_an = A.mul(xb, an);
        for (int i = 0; i < da; ++i) {
          Vec prod = A.mul(A.basis_vec(i), xb_an);
          size_t base =
              (static_cast<size_t>(basis_index(i, r)) * dim + basis_index(j, s)) * dim;
          for (int k = 0; k < da; ++k)
            if (prod[k])
              sc[base + basis_index(k, t)] = prod[k];
        }
      }
    }
  }
  Vec unit(dim, 0);
  for (int k = 0; k < da; ++k)
    unit[basis_index(k, 0)] = A.unit()[k];
  auto C = std::make_shared<Algebra>(F, dim, std::move(sc), std::move(unit));

  // sigma(l) = 1 (x) l, normalized
  auto sigma = [&](int l) {
    int t = rep_of[l], n = n_of[l];
    Vec v(dim, 0);
    const Vec& an = Aint->alpha(n);
    for (int k = 0; k < da; ++k)
      if (an[k])
        v[basis_index(k, t)] = an[k];
    return v;
  };

  std::vector<Vec> alpha;
  for (int n : N.members())
    alpha.push_back(sigma(n));
  std::vector<Mat> phi;
  for (int l : L.members()) {
    Vec sl = sigma(l);
    Vec sli = sigma(P->inv(l));
    Mat M = C->left_mult(sl).mul(C->right_mult(sli));
    phi.push_back(std::move(M));
  }
  return std::make_shared<NInteriorGAlgebra>(C, L, N, std::move(alpha),
                                             std::move(phi));
}

/// Homomorphism of N-interior G-algebras, stored as a matrix acting on
/// coefficient columns.
struct InteriorHom {
  InteriorPtr dom;
  InteriorPtr cod;
  Mat map;

  Vec apply(const Vec& v) const { return map.apply(v); }

  /// Multiplicativity, unit, alpha- and phi-equivariance; throws on failure.
  void validate() const {
    require(dom->group().members() == cod->group().members() &&
                dom->normal().members() == cod->normal().members(),
            "InteriorHom: domain and codomain live over different (G, N)");
    const Algebra& A = dom->algebra();
    const Algebra& B = cod->algebra();
    require(apply(A.unit()) == B.unit(), "InteriorHom: unit not preserved");
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        Vec lhs = apply(A.mul(A.basis_vec(i), A.basis_vec(j)));
        Vec rhs = B.mul(apply(A.basis_vec(i)), apply(A.basis_vec(j)));
        require(lhs == rhs, "InteriorHom: not multiplicative");
      }
    for (int n : dom->normal().members())
      require(apply(dom->alpha(n)) == cod->alpha(n),
              "InteriorHom: alpha not intertwined");
    for (int g : dom->group().members()) {
      Mat lhs = map.mul(dom->phi(g));
      Mat rhs = cod->phi(g).mul(map);
      require(lhs == rhs, "InteriorHom: phi not intertwined");
    }
  }

  bool injective() const { return map.rank() == dom->dim(); }
};

/// The canonical inclusion of crossed products A (x) L' -> A (x) L for
/// L' <= L built over the same interior algebra (both with their
/// construction-time acting groups); representatives of the smaller
/// transversal are renormalized inside the larger one. The codomain of
/// the returned homomorphism is restricted to L' so the two sides share
/// an acting group.
inline InteriorHom crossed_inclusion(const InteriorPtr& Aint, const InteriorPtr& Dsub,
                                     const InteriorPtr& Cbig) {
  const Subgroup& N = Aint->normal();
  const GroupPtr& P = N.parent();
  const Algebra& A = Aint->algebra();
  int da = A.dim();
  require(Cbig->group().contains(Dsub->group()),
          "crossed_inclusion: subalgebra group not contained");
  std::vector<int> reps_d = coset_reps(Dsub->group(), N, CosetSide::Right);
  std::vector<int> reps_c = coset_reps(Cbig->group(), N, CosetSide::Right);
  Mat M(A.field(), Cbig->dim(), Dsub->dim());
  for (size_t r = 0; r < reps_d.size(); ++r) {
    // normalize x_r = n * y_t inside the big transversal
    int t = -1, n = -1;
    for (size_t u = 0; u < reps_c.size(); ++u) {
      int cand = P->mul(reps_d[r], P->inv(reps_c[u]));
      if (N.contains(cand)) {
        t = static_cast<int>(u);
        n = cand;
        break;
      }
    }
    require(t >= 0, "crossed_inclusion: representative not covered");
    for (int i = 0; i < da; ++i) {
      Vec img_a = A.mul(A.basis_vec(i), Aint->alpha(n));
      for (int k = 0; k < da; ++k)
        if (img_a[k])
          M.at(t * da + k, static_cast<int>(r) * da + i) = img_a[k];
    }
  }
  return InteriorHom{Dsub, Cbig->restrict_group(Dsub->group()), std::move(M)};
}

} // namespace ebq
