#pragma once

#include <utility>
#include <vector>

#include "ebq/action.hpp"
#include "ebq/idempotent.hpp"

namespace ebq {

/// A pointed group H_beta: a Wedderburn component of carrier^H together
/// with a lifted primitive idempotent representative.
struct PointedGroup {
  Subgroup H;
  int point_id = 0;
  Vec rep;               // in carrier coordinates, exactly idempotent
  int matrix_rank = 0;   // n_i of the component of carrier^H / J
  std::vector<Subgroup> defect_class; // one H-conjugacy class, set later
};

/// Points of H on a carrier plus the supporting decomposition data used
/// for locating components of other fixed elements.
struct PointsData {
  SubAlgebra fixed;          // carrier^H
  WedderburnData wd;         // of fixed.alg
  std::vector<PointData> prims;
  std::vector<PointedGroup> points;
};

inline PointsData points_on(const ActionOnAlgebra& actH, std::uint64_t seed = 0) {
  SubAlgebra fixed = fixed_points(actH);
  auto fixed_ptr = std::make_shared<Algebra>(fixed.alg);
  WedderburnData wd = wedderburn_components(fixed_ptr);
  std::vector<PointData> prims = primitive_decomposition(fixed_ptr, seed);
  std::vector<PointedGroup> pts;
  for (const PointData& pd : prims) {
    PointedGroup pg{actH.group(), pd.point_id, fixed.to_ambient(pd.rep),
                    pd.matrix_rank, {}};
    require(actH.algebra()->is_idempotent(pg.rep),
            "points_on: representative is not idempotent in the carrier");
    pts.push_back(std::move(pg));
  }
  return PointsData{std::move(fixed), std::move(wd), std::move(prims),
                    std::move(pts)};
}

/// Which Wedderburn component of carrier^H a fixed idempotent touches.
/// Returns the component index; requires exactly one component hit.
/// When `require_primitive` is set, additionally certifies the image is
/// primitive (its corner in A^H/J is one-dimensional).
inline int locate_component(const PointsData& pd, const Vec& carrier_elem,
                            bool require_primitive = true) {
  Vec x = pd.fixed.to_sub(carrier_elem);
  Vec q = pd.wd.quotient.project(x);
  require(!is_zero(q), "locate_component: element vanishes modulo the radical");
  const Algebra& S = pd.wd.quotient.alg;
  int hit = -1;
  for (size_t i = 0; i < pd.wd.central_idempotents.size(); ++i) {
    Vec piece = S.mul(q, pd.wd.central_idempotents[i]);
    if (!is_zero(piece)) {
      require(hit < 0, "locate_component: element meets several components");
      hit = static_cast<int>(i);
    }
  }
  require(hit >= 0, "locate_component: no component hit");
  if (require_primitive) {
    require(S.is_idempotent(q), "locate_component: image is not idempotent");
    SubAlgebra c = detail::corner(std::make_shared<Algebra>(S), q);
    require(c.alg.dim() == 1, "locate_component: image is not primitive");
  }
  return hit;
}

/// All subgroups of H (incremental closure enumeration); intended for
/// the cross-validation scan, so the order is capped.
inline std::vector<Subgroup> all_subgroups(const Subgroup& H, int order_cap = 24) {
  require(H.order() <= order_cap, "all_subgroups: order cap exceeded");
  const GroupPtr& G = H.parent();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue = {{0}};
  seen.insert({0});
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> cur = queue[head];
    for (int h : H.members()) {
      if (std::binary_search(cur.begin(), cur.end(), h))
        continue;
      std::vector<int> gens = cur;
      gens.push_back(h);
      std::vector<int> T = Subgroup::closure_of(G, gens);
      if (seen.insert(T).second)
        queue.push_back(std::move(T));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : seen)
    out.push_back(Subgroup(G, std::vector<int>(m)));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

/// Defect groups of a pointed group: the minimal p-subgroups Q (up to
/// H-conjugacy) with rep in Tr_Q^H(A^Q). All minimal ones must form a
/// single conjugacy class; the full class is stored on the point.
/// With `scan_all_subgroups` the minimality search runs over every
/// subgroup of H instead (cross-validation path; small H only).
inline std::vector<Subgroup> defect_groups(const ActionOnAlgebra& actH,
                                           PointedGroup& pg, int p,
                                           bool scan_all_subgroups = false) {
  const Subgroup& H = actH.group();
  std::vector<Subgroup> classes =
      scan_all_subgroups ? all_subgroups(H) : p_subgroups_up_to_conjugacy(H, p);
  std::vector<int> containing;
  for (size_t i = 0; i < classes.size(); ++i) {
    Subspace img = trace_image(actH, classes[i], H, /*check_ideal=*/false);
    if (img.contains(pg.rep))
      containing.push_back(static_cast<int>(i));
  }
  require(!containing.empty(),
          "defect_groups: no subgroup found (Sylow must always work)");
  int min_order = classes[containing.front()].order();
  for (int i : containing)
    min_order = std::min(min_order, classes[i].order());
  std::vector<Subgroup> minimal;
  for (int i : containing)
    if (classes[i].order() == min_order)
      minimal.push_back(classes[i]);
  for (size_t i = 1; i < minimal.size(); ++i)
    require(are_conjugate(H, minimal[0], minimal[i]),
            "defect_groups: minimal subgroups form several conjugacy classes");
  // store the full conjugacy class, deduplicated, deterministic order
  std::set<std::vector<int>> cls;
  for (int h : H.members())
    cls.insert(minimal[0].conjugated(h).members());
  pg.defect_class.clear();
  for (const auto& m : cls)
    pg.defect_class.push_back(Subgroup(H.parent(), std::vector<int>(m)));
  return minimal;
}

/// Whether the defect class of pg contains a subgroup H-conjugate to Q.
inline bool has_defect(const PointedGroup& pg, const Subgroup& Q) {
  for (const Subgroup& D : pg.defect_class)
    if (D.members() == Q.members())
      return true;
  return false;
}

} // namespace ebq
