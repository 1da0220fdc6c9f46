#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ebq/twisted.hpp"

namespace ebq {

inline std::optional<int> prime_power_base(int order) {
  if (order == 1)
    return std::nullopt;
  int p = 2;
  while (order % p != 0)
    ++p;
  int o = order;
  while (o % p == 0)
    o /= p;
  require(o == 1, "expected a p-group");
  return p;
}

/// One graded component of the extended Brauer quotient: the twisted
/// fixed space, the span of twisted traces from the maximal subgroups
/// of P, and a complement giving quotient coordinates.
struct BrauerComponent {
  GroupAutomorphism phi;
  Subspace fixed;
  Subspace kernel;
  Mat complement;           // rows: ambient representatives of the classes
  std::optional<RowSolver> solver; // over [kernel basis; complement]
  int offset = 0;

  int dim() const { return complement.rows(); }

  /// Quotient coordinates of an ambient vector lying in the fixed space.
  Vec project(const Vec& v) const {
    auto c = solver->solve(v);
    require(c.has_value(), "BrauerComponent: vector outside the fixed space");
    return Vec(c->begin() + kernel.dim(), c->end());
  }

  Vec lift(const Vec& q) const {
    Vec r(complement.cols(), 0);
    for (int i = 0; i < complement.rows(); ++i)
      if (q[i])
        axpy(complement.field(), r, q[i], complement.row(i));
    return r;
  }
};

/// The extended Brauer quotient of an N-interior G-algebra at a
/// p-subgroup P over a closed set S of automorphisms of P lying in K:
/// the direct sum over phi in S of the twisted fixed spaces modulo
/// twisted traces, carrying the graded product, the interior map from
/// N_N^S(P), and the component-permuting action of N_G(P).
class GradedQuotientAlgebra {
public:
  GradedQuotientAlgebra(InteriorPtr parent, Subgroup P,
                        std::vector<GroupAutomorphism> S)
      : parent_(std::move(parent)), P_(std::move(P)),
        ngp_(normalizer_in(parent_->group(), P_)),
        nns_(P_.parent(), {0}) {
    require(parent_->group().contains(P_),
            "extended_brauer_quotient: P must lie in the acting group");
    verify_closed(S);
    std::sort(S.begin(), S.end());
    bool has_id = false;
    for (const auto& s : S)
      has_id = has_id || s.is_identity();
    require(has_id, "extended_brauer_quotient: S must contain the identity");

    build_components(S);
    build_total();
    build_interior();
    build_action();
  }

  const InteriorPtr& parent() const { return parent_; }
  const Subgroup& P() const { return P_; }
  const std::vector<BrauerComponent>& components() const { return comps_; }
  const AlgebraPtr& total() const { return total_; }
  int dim() const { return total_->dim(); }
  const Subgroup& normalizer_of_P() const { return ngp_; }
  const Subgroup& interior_group() const { return nns_; }

  int component_index(const GroupAutomorphism& phi) const {
    for (size_t i = 0; i < comps_.size(); ++i)
      if (comps_[i].phi == phi)
        return static_cast<int>(i);
    throw Error("GradedQuotientAlgebra: automorphism not in the index set");
  }

  int identity_component() const {
    return component_index(GroupAutomorphism::identity(P_));
  }

  /// Brauer class of an ambient vector known to lie in the phi-fixed
  /// space, embedded into total coordinates.
  Vec brauer_image(int comp, const Vec& ambient) const {
    Vec out(dim(), 0);
    Vec q = comps_[comp].project(ambient);
    for (int i = 0; i < comps_[comp].dim(); ++i)
      out[comps_[comp].offset + i] = q[i];
    return out;
  }

  /// Ambient representative of a total-coordinate class.
  Vec lift_total(const Vec& q) const {
    Vec r(parent_->dim(), 0);
    const Field& F = field();
    for (size_t c = 0; c < comps_.size(); ++c)
      for (int i = 0; i < comps_[c].dim(); ++i) {
        ffe x = q[comps_[c].offset + i];
        if (x)
          axpy(F, r, x, comps_[c].complement.row(i));
      }
    return r;
  }

  const Field& field() const { return parent_->field(); }

  /// Interior image of x in N_N^S(P): the class of alpha(x) in the
  /// component of the conjugation automorphism induced by x.
  Vec interior_image(int x) const {
    return interior_[nns_.position_of(x)];
  }

  /// Matrix of the action of x in N_G(P) on total coordinates.
  const Mat& action_matrix(int x) const { return ngp_mats_[ngp_.position_of(x)]; }

  ActionOnAlgebra action_on(const Subgroup& H) const {
    require(ngp_.contains(H), "GradedQuotientAlgebra: H must normalize P");
    std::vector<Mat> mats;
    for (int h : H.members())
      mats.push_back(action_matrix(h));
    return ActionOnAlgebra(total_, H, std::move(mats));
  }

private:
  void build_components(const std::vector<GroupAutomorphism>& S) {
    std::optional<int> p = prime_power_base(P_.order());
    std::vector<Subgroup> maximal =
        p ? maximal_subgroups_of_p_group(P_, *p) : std::vector<Subgroup>{};
    int offset = 0;
    for (const GroupAutomorphism& phi : S) {
      BrauerComponent comp{phi,
                           twisted_fixed_points(*parent_, phi, P_).space,
                           Subspace(field(), parent_->dim()),
                           Mat(field(), 0, parent_->dim()),
                           std::nullopt,
                           offset};
      for (const Subgroup& R : maximal)
        comp.kernel = comp.kernel.sum(twisted_trace_image(*parent_, phi, R));
      require(comp.fixed.contains(comp.kernel),
              "extended_brauer_quotient: trace image leaks out of the fixed space");
      // complement: fixed-space basis rows independent modulo the kernel
      std::vector<Vec> chosen;
      Mat acc = comp.kernel.basis();
      for (int i = 0; i < comp.fixed.dim(); ++i) {
        Vec cand = comp.fixed.basis().row(i);
        Mat trial = acc.vstack(Mat::from_rows(field(), {cand}, parent_->dim()));
        if (trial.rank() == acc.rows() + 1) {
          chosen.push_back(cand);
          acc = std::move(trial);
        }
      }
      comp.complement = Mat::from_rows(field(), chosen, parent_->dim());
      comp.solver.emplace(comp.kernel.basis().vstack(comp.complement));
      offset += comp.dim();
      comps_.push_back(std::move(comp));
    }
  }

  void build_total() {
    const Field& F = field();
    int n = 0;
    for (const auto& c : comps_)
      n += c.dim();
    std::vector<ffe> sc(static_cast<size_t>(n) * n * n, 0);
    const Algebra& A = parent_->algebra();
    for (size_t ci = 0; ci < comps_.size(); ++ci)
      for (size_t cj = 0; cj < comps_.size(); ++cj) {
        GroupAutomorphism target = comps_[ci].phi.compose(comps_[cj].phi);
        int ct = component_index(target);
        for (int i = 0; i < comps_[ci].dim(); ++i)
          for (int j = 0; j < comps_[cj].dim(); ++j) {
            Vec prod = A.mul(comps_[ci].complement.row(i),
                             comps_[cj].complement.row(j));
            require(comps_[ct].fixed.contains(prod),
                    "graded product violates the component containment law");
            Vec q = comps_[ct].project(prod);
            size_t base = (static_cast<size_t>(comps_[ci].offset + i) * n +
                           (comps_[cj].offset + j)) *
                          n;
            for (int t = 0; t < comps_[ct].dim(); ++t)
              sc[base + comps_[ct].offset + t] = q[t];
          }
      }
    int id = identity_component();
    require(comps_[id].fixed.contains(A.unit()),
            "extended_brauer_quotient: unit is not P-fixed");
    Vec unit(n, 0);
    Vec uq = comps_[id].project(A.unit());
    for (int i = 0; i < comps_[id].dim(); ++i)
      unit[comps_[id].offset + i] = uq[i];
    total_ = std::make_shared<Algebra>(F, n, std::move(sc), std::move(unit));
  }

  void build_interior() {
    // N_N^S(P) = {n in N normalizing P with induced automorphism in S}
    const GroupPtr& G = P_.parent();
    std::vector<int> members;
    for (int x : ngp_.members()) {
      if (!parent_->normal().contains(x))
        continue;
      GroupAutomorphism c = GroupAutomorphism::conjugation(P_, x);
      bool in_S = false;
      for (const auto& comp : comps_)
        in_S = in_S || comp.phi == c;
      if (in_S)
        members.push_back(x);
    }
    nns_ = Subgroup(G, std::move(members));
    for (int x : nns_.members()) {
      GroupAutomorphism c = GroupAutomorphism::conjugation(P_, x);
      int ci = component_index(c);
      require(comps_[ci].fixed.contains(parent_->alpha(x)),
              "interior map: alpha(x) is not twisted-fixed");
      interior_.push_back(brauer_image(ci, parent_->alpha(x)));
    }
  }

  void build_action() {
    const Field& F = field();
    int n = dim();
    for (int x : ngp_.members()) {
      Mat M(F, n, n);
      for (size_t ci = 0; ci < comps_.size(); ++ci) {
        GroupAutomorphism moved =
            GroupAutomorphism::conjugation(P_, x)
                .compose(comps_[ci].phi)
                .compose(GroupAutomorphism::conjugation(P_, P_.parent()->inv(x)));
        int ct = component_index(moved); // S must be stable under the action
        for (int i = 0; i < comps_[ci].dim(); ++i) {
          Vec img = parent_->phi(x).apply(comps_[ci].complement.row(i));
          require(comps_[ct].fixed.contains(img),
                  "normalizer action leaves the graded components");
          Vec q = comps_[ct].project(img);
          for (int t = 0; t < comps_[ct].dim(); ++t)
            M.at(comps_[ct].offset + t, comps_[ci].offset + i) = q[t];
        }
      }
      ngp_mats_.push_back(std::move(M));
    }
  }

  InteriorPtr parent_;
  Subgroup P_;
  std::vector<BrauerComponent> comps_;
  AlgebraPtr total_;
  Subgroup ngp_;
  std::vector<Mat> ngp_mats_;
  Subgroup nns_;
  std::vector<Vec> interior_;
};

inline GradedQuotientAlgebra
extended_brauer_quotient(const InteriorPtr& A, const Subgroup& P,
                         std::vector<GroupAutomorphism> S) {
  return GradedQuotientAlgebra(A, P, std::move(S));
}

/// Ordinary Brauer quotient A(P): the single identity component.
inline GradedQuotientAlgebra ordinary_brauer_quotient(const InteriorPtr& A,
                                                      const Subgroup& P) {
  return GradedQuotientAlgebra(A, P, {GroupAutomorphism::identity(P)});
}

/// The isomorphism k N_N(P) -> extended Brauer quotient of kN over K',
/// sending each n to the class of alpha(n) in its conjugation component.
struct RhoKPrime {
  Subgroup NNP;
  Algebra group_side;                       // k N_N(P)
  std::shared_ptr<GradedQuotientAlgebra> quotient;
  Mat rho;                                  // quotient dim x |N_N(P)|

  void verify_isomorphism() const {
    int n = group_side.dim();
    require(quotient->dim() == n,
            "rho_k_prime: dimensions differ: " + std::to_string(quotient->dim()) +
                " vs " + std::to_string(n));
    require(rho.rank() == n, "rho_k_prime: map is not bijective");
    // multiplicative on all basis pairs, unit-preserving
    require(rho.apply(group_side.unit()) == quotient->total()->unit(),
            "rho_k_prime: unit not preserved");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = rho.apply(group_side.mul(group_side.basis_vec(i),
                                           group_side.basis_vec(j)));
        Vec rhs = quotient->total()->mul(rho.apply(group_side.basis_vec(i)),
                                         rho.apply(group_side.basis_vec(j)));
        require(lhs == rhs, "rho_k_prime: map is not multiplicative");
      }
  }

  /// Equivariance for the N_G(P)-actions on both sides.
  void verify_equivariant() const {
    const GroupPtr& G = NNP.parent();
    const Subgroup& ngp = quotient->normalizer_of_P();
    for (int x : ngp.members()) {
      // conjugation permutation on k N_N(P)
      Mat Px(group_side.field(), group_side.dim(), group_side.dim());
      for (int j = 0; j < group_side.dim(); ++j) {
        int img = G->conj(x, NNP.members()[j]);
        Px.at(NNP.position_of(img), j) = 1;
      }
      Mat lhs = rho.mul(Px);
      Mat rhs = quotient->action_matrix(x).mul(rho);
      require(lhs == rhs, "rho_k_prime: not N_G(P)-equivariant");
    }
  }
};

inline RhoKPrime rho_k_prime(const Subgroup& G, const Subgroup& N,
                             const Subgroup& P, const Field& F) {
  InteriorPtr A = make_kN_interior(G, N, F);
  std::vector<GroupAutomorphism> Kp = compute_K_prime(N, P);
  auto quot = std::make_shared<GradedQuotientAlgebra>(A, P, Kp);
  Subgroup NNP = normalizer_in(N, P);
  Algebra kNNP = group_algebra(NNP, F);
  Mat rho(F, quot->dim(), kNNP.dim());
  for (int j = 0; j < kNNP.dim(); ++j) {
    int n = NNP.members()[j];
    GroupAutomorphism c = GroupAutomorphism::conjugation(P, n);
    int ci = quot->component_index(c);
    Vec img = quot->brauer_image(ci, A->alpha(n));
    for (int i = 0; i < quot->dim(); ++i)
      rho.at(i, j) = img[i];
  }
  RhoKPrime out{std::move(NNP), std::move(kNNP), std::move(quot), std::move(rho)};
  out.verify_isomorphism();
  out.verify_equivariant();
  return out;
}

/// Componentwise map of graded quotients induced by a homomorphism of
/// interior algebras; checks well-definedness on the kernels.
struct InducedQuotientHom {
  Mat map; // total(B) x total(A)
};

inline InducedQuotientHom induced_quotient_hom(const InteriorHom& f,
                                               const GradedQuotientAlgebra& QA,
                                               const GradedQuotientAlgebra& QB) {
  f.validate();
  require(QA.P() == QB.P(), "induced_quotient_hom: different P");
  require(QA.components().size() == QB.components().size(),
          "induced_quotient_hom: different index sets");
  const Field& F = QA.field();
  Mat M(F, QB.dim(), QA.dim());
  for (size_t c = 0; c < QA.components().size(); ++c) {
    const BrauerComponent& ca = QA.components()[c];
    require(ca.phi == QB.components()[c].phi,
            "induced_quotient_hom: component mismatch");
    const BrauerComponent& cb = QB.components()[c];
    // kernels map into kernels (well-definedness)
    for (int i = 0; i < ca.kernel.dim(); ++i) {
      Vec img = f.apply(ca.kernel.basis().row(i));
      require(cb.kernel.contains(img),
              "induced_quotient_hom: kernel does not map into kernel");
    }
    for (int i = 0; i < ca.dim(); ++i) {
      Vec img = f.apply(ca.complement.row(i));
      require(cb.fixed.contains(img),
              "induced_quotient_hom: image leaves the twisted fixed space");
      Vec q = cb.project(img);
      for (int t = 0; t < cb.dim(); ++t)
        M.at(cb.offset + t, ca.offset + i) = q[t];
    }
  }
  return InducedQuotientHom{std::move(M)};
}

} // namespace ebq
