#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ebq/perm.hpp"

namespace ebq {

class Subgroup;

/// Fully enumerated permutation group. Elements are listed breadth-first
/// from the identity in generator order, which fixes the index of every
/// element and makes all downstream constructions reproducible.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
  static constexpr int kDefaultCap = 10000;

  static std::shared_ptr<const FiniteGroup>
  generate(const std::vector<Perm>& gens, int degree_if_empty = 1,
           int size_cap = kDefaultCap) {
    int degree = gens.empty() ? degree_if_empty : gens[0].degree();
    for (const Perm& g : gens)
      require(g.degree() == degree, "generate_group: generator degree mismatch");
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->degree_ = degree;
    G->gens_ = gens;
    std::map<Perm, int> index;
    G->elements_.push_back(Perm::identity(degree));
    index[G->elements_[0]] = 0;
    for (size_t head = 0; head < G->elements_.size(); ++head) {
      Perm cur = G->elements_[head]; // copy: vector may reallocate
      for (const Perm& s : gens) {
        Perm nxt = cur * s;
        if (index.emplace(nxt, static_cast<int>(G->elements_.size())).second) {
          G->elements_.push_back(nxt);
          require(static_cast<int>(G->elements_.size()) <= size_cap,
                  "generate_group: closure exceeds size cap");
        }
      }
    }
    G->index_ = std::move(index);
    G->build_tables();
    return G;
  }

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Perm& element(int i) const { return elements_[i]; }

  int index_of(const Perm& p) const {
    auto it = index_.find(p);
    require(it != index_.end(), "FiniteGroup: permutation is not a member");
    return it->second;
  }

  bool contains(const Perm& p) const { return index_.count(p) > 0; }

  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); } // g a g^{-1}

  int element_order(int a) const {
    int n = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  /// Least common multiple of all element orders.
  long exponent() const {
    long ex = 1;
    for (int i = 0; i < order(); ++i) {
      long o = element_order(i);
      ex = std::lcm(ex, o);
    }
    return ex;
  }

  Subgroup full_subgroup() const;
  Subgroup trivial_subgroup() const;
  Subgroup subgroup_from_indices(std::vector<int> members) const;
  Subgroup subgroup_generated(const std::vector<int>& gen_indices) const;
  Subgroup subgroup_generated_perms(const std::vector<Perm>& gens) const;

private:
  FiniteGroup() = default;

  void build_tables() {
    int n = order();
    mul_.resize(static_cast<size_t>(n) * n);
    inv_.resize(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        mul_[static_cast<size_t>(a) * n + b] = index_.at(elements_[a] * elements_[b]);
    for (int a = 0; a < n; ++a)
      inv_[a] = index_.at(elements_[a].inverse());
  }

  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Subgroup of an enumerated group, held as a sorted list of element
/// indices into the parent.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<int> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    require(!members_.empty() && members_[0] == 0,
            "Subgroup: must contain the identity");
    for (int a : members_)
      require(a >= 0 && a < parent_->order(), "Subgroup: index out of range");
    validate_closure();
  }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }

  bool contains(int idx) const {
    return std::binary_search(members_.begin(), members_.end(), idx);
  }

  bool contains(const Subgroup& o) const {
    require(same_parent(o), "Subgroup: parent mismatch");
    return std::includes(members_.begin(), members_.end(),
                         o.members_.begin(), o.members_.end());
  }

  bool same_parent(const Subgroup& o) const { return parent_ == o.parent_; }

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }

  /// Position of a parent index inside the member list.
  int position_of(int idx) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), idx);
    require(it != members_.end() && *it == idx, "Subgroup: element not a member");
    return static_cast<int>(it - members_.begin());
  }

  Subgroup conjugated(int g) const {
    std::vector<int> m;
    m.reserve(members_.size());
    for (int a : members_)
      m.push_back(parent_->conj(g, a));
    return Subgroup(parent_, std::move(m));
  }

  Subgroup intersect(const Subgroup& o) const {
    require(same_parent(o), "Subgroup: parent mismatch");
    std::vector<int> m;
    std::set_intersection(members_.begin(), members_.end(),
                          o.members_.begin(), o.members_.end(),
                          std::back_inserter(m));
    return Subgroup(parent_, std::move(m));
  }

  bool is_normal_in(const Subgroup& big) const {
    require(big.contains(*this), "is_normal_in: not a subgroup");
    for (int g : big.members_) {
      for (int a : members_)
        if (!contains(parent_->conj(g, a)))
          return false;
    }
    return true;
  }

  /// Small generating sequence, chosen greedily in enumeration order.
  std::vector<int> generator_indices() const {
    std::vector<int> gens;
    std::vector<int> closure = {0};
    for (int a : members_) {
      if (std::binary_search(closure.begin(), closure.end(), a))
        continue;
      gens.push_back(a);
      closure = closure_of(parent_, gens);
      if (static_cast<int>(closure.size()) == order())
        break;
    }
    return gens;
  }

  static std::vector<int> closure_of(const GroupPtr& G, const std::vector<int>& gen_idx) {
    std::vector<int> elems = {0};
    std::set<int> seen = {0};
    for (size_t head = 0; head < elems.size(); ++head)
      for (int s : gen_idx) {
        int nxt = G->mul(elems[head], s);
        if (seen.insert(nxt).second)
          elems.push_back(nxt);
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

private:
  void validate_closure() const {
    for (int a : members_) {
      require(contains(parent_->inv(a)), "Subgroup: not closed under inverse");
      for (int b : members_)
        require(contains(parent_->mul(a, b)), "Subgroup: not closed under product");
    }
  }

  GroupPtr parent_;
  std::vector<int> members_;
};

inline Subgroup FiniteGroup::full_subgroup() const {
  std::vector<int> m(order());
  std::iota(m.begin(), m.end(), 0);
  return Subgroup(shared_from_this(), std::move(m));
}

inline Subgroup FiniteGroup::trivial_subgroup() const {
  return Subgroup(shared_from_this(), {0});
}

inline Subgroup FiniteGroup::subgroup_from_indices(std::vector<int> members) const {
  return Subgroup(shared_from_this(), std::move(members));
}

inline Subgroup FiniteGroup::subgroup_generated(const std::vector<int>& gen_indices) const {
  return Subgroup(shared_from_this(),
                  Subgroup::closure_of(shared_from_this(), gen_indices));
}

inline Subgroup FiniteGroup::subgroup_generated_perms(const std::vector<Perm>& gens) const {
  std::vector<int> idx;
  for (const Perm& g : gens)
    idx.push_back(index_of(g));
  return subgroup_generated(idx);
}

/// N_H(P) = {h in H : h P h^{-1} = P}.
inline Subgroup normalizer(const Subgroup& H, const Subgroup& P) {
  require(H.same_parent(P), "normalizer: parent mismatch");
  require(H.contains(P), "normalizer: P is not a subgroup of H");
  const GroupPtr& G = H.parent();
  std::vector<int> m;
  for (int h : H.members()) {
    bool ok = true;
    for (int a : P.members())
      if (!P.contains(G->conj(h, a))) {
        ok = false;
        break;
      }
    if (ok)
      m.push_back(h);
  }
  return Subgroup(G, std::move(m));
}

/// C_H(P) = {h in H : hu = uh for all u in P}.
inline Subgroup centralizer(const Subgroup& H, const Subgroup& P) {
  require(H.same_parent(P), "centralizer: parent mismatch");
  const GroupPtr& G = H.parent();
  std::vector<int> m;
  for (int h : H.members()) {
    bool ok = true;
    for (int a : P.members())
      if (G->mul(h, a) != G->mul(a, h)) {
        ok = false;
        break;
      }
    if (ok)
      m.push_back(h);
  }
  return Subgroup(G, std::move(m));
}

/// Product subgroup AB; valid whenever one factor normalizes the other
/// (computed as the generated closure, so it is safe in general).
inline Subgroup subgroup_product(const Subgroup& A, const Subgroup& B) {
  require(A.same_parent(B), "subgroup_product: parent mismatch");
  std::vector<int> gens = A.members();
  gens.insert(gens.end(), B.members().begin(), B.members().end());
  return A.parent()->subgroup_generated(gens);
}

enum class CosetSide { Left, Right };

/// Transversal of L in H. Left side tiles H = union of r*L, right side
/// H = union of L*r. The first representative is always the identity and
/// later ones are the first elements not yet covered, in enumeration order.
inline std::vector<int> coset_reps(const Subgroup& H, const Subgroup& L,
                                   CosetSide side) {
  require(H.contains(L), "coset_reps: L is not contained in H");
  const GroupPtr& G = H.parent();
  std::vector<int> reps;
  std::set<int> covered;
  for (int h : H.members()) {
    if (covered.count(h))
      continue;
    reps.push_back(h);
    for (int l : L.members())
      covered.insert(side == CosetSide::Left ? G->mul(h, l) : G->mul(l, h));
  }
  require(static_cast<int>(reps.size()) * L.order() == H.order(),
          "coset_reps: tiling failed");
  return reps;
}

/// All p-subgroups of H (not up to conjugacy), grouped by construction
/// but returned deduplicated and sorted by (order, member list).
inline std::vector<Subgroup> all_p_subgroups(const Subgroup& H, int p) {
  const GroupPtr& G = H.parent();
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<int>> layer = {{0}};
  seen.insert({0});
  out.push_back(Subgroup(G, {0}));
  // p-power-order elements of H
  std::vector<int> p_elements;
  for (int h : H.members()) {
    int o = G->element_order(h);
    while (o % p == 0)
      o /= p;
    if (o == 1 && h != 0)
      p_elements.push_back(h);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& members : layer) {
      Subgroup S(G, std::vector<int>(members));
      Subgroup NS = normalizer(H, S);
      for (int x : p_elements) {
        if (S.contains(x) || !NS.contains(x))
          continue;
        std::vector<int> gens = members;
        gens.push_back(x);
        std::vector<int> T = Subgroup::closure_of(G, gens);
        long sz = static_cast<long>(T.size());
        long expect = static_cast<long>(members.size()) * p;
        if (sz != expect)
          continue; // not an index-p extension
        if (seen.insert(T).second) {
          next.push_back(T);
          out.push_back(Subgroup(G, std::vector<int>(T)));
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

/// One representative per H-conjugacy class of p-subgroups of H,
/// including the trivial subgroup, ordered by size then member list.
inline std::vector<Subgroup> p_subgroups_up_to_conjugacy(const Subgroup& H, int p) {
  std::vector<Subgroup> all = all_p_subgroups(H, p);
  std::vector<Subgroup> reps;
  std::set<std::vector<int>> assigned;
  for (const Subgroup& S : all) {
    if (assigned.count(S.members()))
      continue;
    reps.push_back(S);
    for (int h : H.members())
      assigned.insert(S.conjugated(h).members());
  }
  return reps;
}

/// Maximal subgroups of a p-group P (all of index p).
inline std::vector<Subgroup> maximal_subgroups_of_p_group(const Subgroup& P, int p) {
  std::vector<Subgroup> all = all_p_subgroups(P, p);
  std::vector<Subgroup> maximal;
  for (const Subgroup& S : all)
    if (S.order() * p == P.order())
      maximal.push_back(S);
  require(P.order() == 1 || !maximal.empty(),
          "maximal_subgroups_of_p_group: P is not a p-group");
  return maximal;
}

/// All proper subgroups of a p-group P.
inline std::vector<Subgroup> proper_subgroups_of_p_group(const Subgroup& P, int p) {
  std::vector<Subgroup> all = all_p_subgroups(P, p);
  std::vector<Subgroup> proper;
  for (const Subgroup& S : all)
    if (S.order() < P.order())
      proper.push_back(S);
  return proper;
}

/// First Sylow p-subgroup in deterministic order.
inline Subgroup sylow_subgroup(const Subgroup& H, int p) {
  std::vector<Subgroup> all = all_p_subgroups(H, p);
  int top = all.back().order();
  for (const Subgroup& S : all)
    if (S.order() == top)
      return S;
  return all.back();
}

/// Whether two subgroups of H are conjugate inside H.
inline bool are_conjugate(const Subgroup& H, const Subgroup& A, const Subgroup& B) {
  if (A.order() != B.order())
    return false;
  for (int h : H.members())
    if (A.conjugated(h).members() == B.members())
      return true;
  return false;
}

} // namespace ebq
