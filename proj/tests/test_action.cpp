#include <catch2/catch_amalgamated.hpp>

#include "ebq/action.hpp"
#include "ebq/interior.hpp"

using namespace ebq;

namespace {

GroupPtr s3() { return FiniteGroup::generate({Perm({1, 0, 2}), Perm({1, 2, 0})}); }

/// kH with H acting by conjugation.
ActionOnAlgebra conj_on_group_algebra(const Subgroup& H, const Field& F) {
  auto A = std::make_shared<Algebra>(group_algebra(H, F));
  const GroupPtr& G = H.parent();
  return ActionOnAlgebra::from_function(A, H, [&, A](int g, const Vec& v) {
    Vec r(A->dim(), 0);
    for (int j = 0; j < A->dim(); ++j)
      if (v[j]) {
        int img = H.position_of(G->conj(g, H.members()[j]));
        r[img] = A->field().add(r[img], v[j]);
      }
    return r;
  });
}

} // namespace

TEST_CASE("fixed points of conjugation") {
  auto G = s3();
  Field F(2, 1);
  auto full = G->full_subgroup();
  ActionOnAlgebra act = conj_on_group_algebra(full, F);
  act.validate();

  // trivial subgroup fixes everything
  SubAlgebra all = fixed_points(act.restricted(G->trivial_subgroup()));
  REQUIRE(all.alg.dim() == 6);

  // full conjugation gives the center: class sums, dim 3
  SubAlgebra Z = fixed_points(act);
  REQUIRE(Z.alg.dim() == 3);
  REQUIRE(Subspace::span(Z.basis) == center_subspace(*act.algebra()));

  // P-conjugation fixed points of kN: dimension = number of P-orbits on N
  auto A3 = G->subgroup_generated_perms({Perm({1, 2, 0})});
  auto kN = make_kN_interior(full, A3, F);
  auto P2 = G->subgroup_generated_perms({Perm({1, 0, 2})});
  SubAlgebra fp = fixed_points(kN->conjugation_action(P2));
  // orbits of <(01)> on A3 = {1}, {g, g^2} -> 2
  REQUIRE(fp.alg.dim() == 2);
}

TEST_CASE("relative trace") {
  auto G = s3();
  Field F(2, 1);
  auto full = G->full_subgroup();
  ActionOnAlgebra act = conj_on_group_algebra(full, F);

  // Q = H returns the argument
  Vec a = act.algebra()->basis_vec(0);
  REQUIRE(relative_trace(act, full, full, a) == a);

  // Tr_1^P(1) = |P| * 1 = 0 in characteristic p
  auto C3 = G->subgroup_generated_perms({Perm({1, 2, 0})});
  Field F3(3, 1);
  ActionOnAlgebra act3 = conj_on_group_algebra(C3, F3);
  Vec tr = relative_trace(act3, G->trivial_subgroup().parent() == G
                                    ? G->trivial_subgroup()
                                    : G->trivial_subgroup(),
                          C3, act3.algebra()->unit());
  REQUIRE(is_zero(tr));

  // explicit 3-term sum: A = kS3 over GF(2), Q = <(0 1)>, H = S3,
  // a = basis of (0 1) under conjugation
  auto Q = G->subgroup_generated_perms({Perm({1, 0, 2})});
  int t_idx = G->index_of(Perm({1, 0, 2}));
  Vec arg = act.algebra()->basis_vec(t_idx);
  Vec got = relative_trace(act, Q, full, arg);
  // oracle: sum the three coset conjugates by hand
  Vec expect(6, 0);
  for (int h : coset_reps(full, Q, CosetSide::Left)) {
    int img = G->conj(h, t_idx);
    expect[img] = F.add(expect[img], 1);
  }
  REQUIRE(got == expect);
  // the sum of all three transpositions
  int ones = 0;
  for (ffe x : got)
    ones += x;
  REQUIRE(ones == 3);

  // independence of coset representatives: replace each rep by rep * q
  Vec rotated(6, 0);
  auto reps = coset_reps(full, Q, CosetSide::Left);
  for (int h : reps) {
    int hq = G->mul(h, G->index_of(Perm({1, 0, 2})));
    Vec img = act.apply(hq, arg);
    rotated = vec_add(F, rotated, img);
  }
  REQUIRE(rotated == got);

  // not Q-fixed input is rejected
  int g_idx = G->index_of(Perm({1, 2, 0}));
  REQUIRE_THROWS_AS(relative_trace(act, Q, full, act.algebra()->basis_vec(g_idx)),
                    Error);
}

TEST_CASE("trace image") {
  auto G = s3();
  Field F(2, 1);
  auto full = G->full_subgroup();
  ActionOnAlgebra act = conj_on_group_algebra(full, F);

  // Q = H gives all of A^H
  SubAlgebra AH = fixed_points(act);
  Subspace full_img = trace_image(act, full, full);
  REQUIRE(full_img == Subspace::span(AH.basis));

  // Sylow p-subgroup: index prime to p, image is everything
  auto C2 = G->subgroup_generated_perms({Perm({1, 0, 2})});
  Subspace syl_img = trace_image(act, C2, full);
  REQUIRE(syl_img == Subspace::span(AH.basis));

  // Q = 1 gives the ideal of defect-zero traces in kS3 over GF(2)
  Subspace zero_img = trace_image(act, G->trivial_subgroup(), full);
  // oracle: explicit span of Tr_1^G over a basis of A
  std::vector<Vec> rows;
  for (int i = 0; i < 6; ++i) {
    Vec r(6, 0);
    for (int h = 0; h < 6; ++h) {
      int img = G->conj(h, i);
      r[img] = F.add(r[img], 1);
    }
    rows.push_back(r);
  }
  REQUIRE(zero_img == Subspace::span(F, rows, 6));
  REQUIRE(zero_img.dim() == 1);

  // monotonicity in Q
  REQUIRE(syl_img.contains(zero_img));

  // trace_image(Q, H) = trace_image(Q_p, H) for Q_p Sylow in Q
  auto A3 = G->subgroup_generated_perms({Perm({1, 2, 0})});
  Subspace via_A3 = trace_image(act, A3, full);
  Subspace via_triv = trace_image(act, G->trivial_subgroup(), full);
  // Sylow 2-subgroup of A3 is trivial
  REQUIRE(via_A3 == via_triv);
}
