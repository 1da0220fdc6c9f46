#include <catch2/catch_amalgamated.hpp>

#include "ebq/interior.hpp"
#include "ebq/points.hpp"

using namespace ebq;

namespace {

GroupPtr s3() { return FiniteGroup::generate({Perm({1, 0, 2}), Perm({1, 2, 0})}); }

PointsData blocks_of(const Subgroup& H, const Field& F, int p) {
  auto kH = make_kN_interior(H, H, F);
  ActionOnAlgebra act = kH->conjugation_action(H);
  PointsData pd = points_on(act);
  for (auto& pg : pd.points)
    defect_groups(act, pg, p);
  return pd;
}

} // namespace

TEST_CASE("points of a local carrier") {
  // carrier = kC_p with conjugation action of C_p (trivial): one point
  auto C3 = FiniteGroup::generate({Perm({1, 2, 0})});
  Field F(3, 1);
  PointsData pd = blocks_of(C3->full_subgroup(), F, 3);
  REQUIRE(pd.points.size() == 1);
  REQUIRE(pd.points[0].rep == pd.fixed.alg.unit());
  // defect of the unique point is the whole p-group
  REQUIRE(pd.points[0].defect_class.size() == 1);
  REQUIRE(pd.points[0].defect_class[0].order() == 3);
}

TEST_CASE("blocks of kS3 at p = 2 over GF(4)") {
  auto G = s3();
  Field F(2, 2);
  PointsData pd = blocks_of(G->full_subgroup(), F, 2);
  REQUIRE(pd.points.size() == 2);

  // one block has defect C2 (principal), the other defect 1
  std::vector<int> defect_orders;
  for (const auto& pg : pd.points)
    defect_orders.push_back(pg.defect_class[0].order());
  std::sort(defect_orders.begin(), defect_orders.end());
  REQUIRE(defect_orders == std::vector<int>{1, 2});

  // the carrier here is Z(kS3): commutative, so every component is a
  // one-by-one matrix algebra
  for (const auto& pg : pd.points)
    REQUIRE(pg.matrix_rank == 1);
}

TEST_CASE("blocks of kS3 at p = 3") {
  auto G = s3();
  Field F(3, 1);
  PointsData pd = blocks_of(G->full_subgroup(), F, 3);
  // a single block with defect C3 (the Sylow)
  REQUIRE(pd.points.size() == 1);
  REQUIRE(pd.points[0].defect_class[0].order() == 3);
}

TEST_CASE("dim-1 carrier has one point") {
  Field F(2, 1);
  auto C2 = FiniteGroup::generate({Perm({1, 0})});
  auto kTriv = make_kN_interior(C2->trivial_subgroup(), C2->trivial_subgroup(), F);
  ActionOnAlgebra act = kTriv->conjugation_action(C2->trivial_subgroup());
  PointsData pd = points_on(act);
  REQUIRE(pd.points.size() == 1);
}

TEST_CASE("defect invariants") {
  auto G = s3();
  Field F(2, 2);
  auto full = G->full_subgroup();
  auto kG = make_kN_interior(full, full, F);
  ActionOnAlgebra act = kG->conjugation_action(full);
  PointsData pd = points_on(act);
  for (auto& pg : pd.points) {
    auto minimal = defect_groups(act, pg, 2);
    // the defect class consists of p-groups
    for (const auto& D : pg.defect_class) {
      int o = D.order();
      while (o % 2 == 0)
        o /= 2;
      REQUIRE(o == 1);
    }
    // cross-validation: scanning all subgroups gives the same minimal class
    PointedGroup copy = pg;
    auto minimal_all = defect_groups(act, copy, 2, /*scan_all_subgroups=*/true);
    REQUIRE(are_conjugate(full, minimal[0], minimal_all[0]));
  }

  // trace-ideal monotonicity on the same carrier
  auto classes = p_subgroups_up_to_conjugacy(full, 2);
  for (const auto& q1 : classes)
    for (const auto& q2 : classes)
      if (q2.contains(q1))
        REQUIRE(trace_image(act, q2, full, false)
                    .contains(trace_image(act, q1, full, false)));
}

TEST_CASE("locate_component") {
  auto G = s3();
  Field F(2, 2);
  PointsData pd = blocks_of(G->full_subgroup(), F, 2);
  // each point's own representative locates to its component
  for (const auto& pg : pd.points)
    REQUIRE(locate_component(pd, pg.rep) == pg.point_id);
  // the unit hits both components
  REQUIRE_THROWS_AS(locate_component(pd, pd.fixed.to_ambient(pd.fixed.alg.unit())),
                    Error);
}

TEST_CASE("all_subgroups enumeration") {
  auto G = s3();
  auto subs = all_subgroups(G->full_subgroup());
  REQUIRE(subs.size() == 6); // 1, three C2, C3, S3
  auto G4 = FiniteGroup::generate({Perm({1, 0, 2, 3}), Perm({1, 2, 3, 0})});
  REQUIRE(all_subgroups(G4->full_subgroup()).size() == 30);
}
