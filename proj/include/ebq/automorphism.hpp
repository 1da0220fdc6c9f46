#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ebq/group.hpp"

namespace ebq {

/// Automorphism of a subgroup P, stored as the list of image indices
/// (into the parent group) aligned with P's member list.
class GroupAutomorphism {
public:
  GroupAutomorphism(Subgroup domain, std::vector<int> table)
      : domain_(std::move(domain)), table_(std::move(table)) {
    require(table_.size() == domain_.members().size(),
            "GroupAutomorphism: table size mismatch");
    validate();
  }

  static GroupAutomorphism identity(const Subgroup& P) {
    return GroupAutomorphism(P, P.members());
  }

  /// Conjugation u -> g u g^{-1} restricted to P; g must normalize P.
  static GroupAutomorphism conjugation(const Subgroup& P, int g) {
    const GroupPtr& G = P.parent();
    std::vector<int> t;
    t.reserve(P.members().size());
    for (int u : P.members()) {
      int v = G->conj(g, u);
      require(P.contains(v), "conjugation: element does not normalize P");
      t.push_back(v);
    }
    return GroupAutomorphism(P, std::move(t));
  }

  const Subgroup& domain() const { return domain_; }
  const std::vector<int>& table() const { return table_; }

  /// Image of a parent element index that lies in P.
  int map(int u) const { return table_[domain_.position_of(u)]; }

  bool is_identity() const { return table_ == domain_.members(); }

  /// this after o:  (this o o)(u) = this(o(u)).
  GroupAutomorphism compose(const GroupAutomorphism& o) const {
    require(domain_ == o.domain_, "compose: domain mismatch");
    std::vector<int> t;
    t.reserve(table_.size());
    for (int u : o.table_)
      t.push_back(map(u));
    return GroupAutomorphism(domain_, std::move(t));
  }

  GroupAutomorphism inverse() const {
    std::vector<int> t(table_.size());
    for (size_t i = 0; i < table_.size(); ++i)
      t[domain_.position_of(table_[i])] = domain_.members()[i];
    return GroupAutomorphism(domain_, std::move(t));
  }

  bool operator==(const GroupAutomorphism& o) const { return table_ == o.table_; }
  bool operator!=(const GroupAutomorphism& o) const { return table_ != o.table_; }
  bool operator<(const GroupAutomorphism& o) const { return table_ < o.table_; }

private:
  void validate() const {
    const GroupPtr& G = domain_.parent();
    std::set<int> img;
    for (int v : table_) {
      require(domain_.contains(v), "GroupAutomorphism: image outside domain");
      img.insert(v);
    }
    require(img.size() == table_.size(), "GroupAutomorphism: table not bijective");
    const auto& mem = domain_.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = 0; j < mem.size(); ++j) {
        int uv = G->mul(mem[i], mem[j]);
        require(map(uv) == G->mul(table_[i], table_[j]),
                "GroupAutomorphism: table is not multiplicative");
      }
  }

  Subgroup domain_;
  std::vector<int> table_;
};

/// Complete automorphism group of P, by depth-first search over images
/// of a small generating set, each candidate validated on the full
/// multiplication table. Sorted lexicographically by image table.
inline std::vector<GroupAutomorphism> automorphism_group(const Subgroup& P,
                                                         int order_cap = 64) {
  require(P.order() <= order_cap, "automorphism_group: order cap exceeded");
  const GroupPtr& G = P.parent();
  std::vector<int> gens = P.generator_indices();
  if (gens.empty())
    return {GroupAutomorphism::identity(P)};

  // candidate images per generator: same element order
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int o = G->element_order(gens[i]);
    for (int v : P.members())
      if (G->element_order(v) == o)
        candidates[i].push_back(v);
  }

  std::vector<GroupAutomorphism> out;
  std::vector<int> pick(gens.size(), -1);
  auto try_build = [&]() {
    // grow the image map along the closure of the generators
    std::vector<int> elems = {0};
    std::vector<int> image = {0};
    std::set<int> seen = {0};
    for (size_t head = 0; head < elems.size(); ++head)
      for (size_t s = 0; s < gens.size(); ++s) {
        int nxt = G->mul(elems[head], gens[s]);
        if (seen.insert(nxt).second) {
          elems.push_back(nxt);
          image.push_back(G->mul(image[head], pick[s]));
        }
      }
    if (static_cast<int>(elems.size()) != P.order())
      return; // generators of P must close over all of P
    std::vector<int> table(P.order());
    std::set<int> img_set;
    for (size_t i = 0; i < elems.size(); ++i) {
      if (!P.contains(image[i]))
        return;
      table[P.position_of(elems[i])] = image[i];
      img_set.insert(image[i]);
    }
    if (static_cast<int>(img_set.size()) != P.order())
      return;
    // full multiplicativity check
    const auto& mem = P.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = 0; j < mem.size(); ++j) {
        int uv = G->mul(mem[i], mem[j]);
        if (table[P.position_of(uv)] != G->mul(table[i], table[j]))
          return;
      }
    out.push_back(GroupAutomorphism(P, std::move(table)));
  };

  std::vector<size_t> idx(gens.size(), 0);
  // odometer over candidate tuples
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i)
      pick[i] = candidates[i][idx[i]];
    try_build();
    size_t d = 0;
    while (d < gens.size() && ++idx[d] == candidates[d].size()) {
      idx[d] = 0;
      ++d;
    }
    if (d == gens.size())
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void verify_closed(const std::vector<GroupAutomorphism>& S) {
  auto find = [&](const GroupAutomorphism& a) {
    for (const auto& b : S)
      if (a == b)
        return true;
    return false;
  };
  for (const auto& a : S) {
    require(find(a.inverse()), "automorphism set: not closed under inverse");
    for (const auto& b : S)
      require(find(a.compose(b)), "automorphism set: not closed under composition");
  }
}

/// N_H(P) for P not necessarily contained in H.
inline Subgroup normalizer_in(const Subgroup& H, const Subgroup& P) {
  const GroupPtr& G = P.parent();
  std::vector<int> m;
  for (int h : H.members()) {
    bool ok = true;
    for (int u : P.members())
      if (!P.contains(G->conj(h, u))) {
        ok = false;
        break;
      }
    if (ok)
      m.push_back(h);
  }
  return Subgroup(G, std::move(m));
}

/// K = {phi in Aut(P) : phi(u) u^{-1} in N for all u in P}. A subgroup
/// of Aut(P) when N is normal; closure is verified.
inline std::vector<GroupAutomorphism> compute_K(const Subgroup& G_full,
                                                const Subgroup& N,
                                                const Subgroup& P) {
  require(N.is_normal_in(G_full), "compute_K: N is not normal in G");
  const GroupPtr& G = P.parent();
  std::vector<GroupAutomorphism> K;
  for (const GroupAutomorphism& phi : automorphism_group(P)) {
    bool ok = true;
    const auto& mem = P.members();
    for (size_t i = 0; i < mem.size() && ok; ++i)
      ok = N.contains(G->mul(phi.table()[i], G->inv(mem[i])));
    if (ok)
      K.push_back(phi);
  }
  verify_closed(K);
  return K;
}

/// K' = automorphisms of P induced by conjugation with elements of N;
/// |K'| = [N_N(P) : C_N(P)].
inline std::vector<GroupAutomorphism> compute_K_prime(const Subgroup& N,
                                                      const Subgroup& P) {
  Subgroup NNP = normalizer_in(N, P);
  std::set<std::vector<int>> seen;
  std::vector<GroupAutomorphism> out;
  for (int n : NNP.members()) {
    GroupAutomorphism c = GroupAutomorphism::conjugation(P, n);
    if (seen.insert(c.table()).second)
      out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  Subgroup CNP = centralizer(N, P);
  require(static_cast<int>(out.size()) * CNP.order() == NNP.order(),
          "compute_K_prime: |K'| != [N_N(P) : C_N(P)]");
  return out;
}

/// T = {phi in Aut_G(P) : phi(u) u^{-1} in N for all u}, the G-induced
/// members of K.
inline std::vector<GroupAutomorphism> compute_T(const Subgroup& G_full,
                                                const Subgroup& N,
                                                const Subgroup& P) {
  const GroupPtr& G = P.parent();
  Subgroup NGP = normalizer_in(G_full, P);
  std::set<std::vector<int>> seen;
  std::vector<GroupAutomorphism> out;
  for (int x : NGP.members()) {
    GroupAutomorphism c = GroupAutomorphism::conjugation(P, x);
    bool ok = true;
    const auto& mem = P.members();
    for (size_t i = 0; i < mem.size() && ok; ++i)
      ok = N.contains(G->mul(c.table()[i], G->inv(mem[i])));
    if (ok && seen.insert(c.table()).second)
      out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Inverse image of T under N_G(P) -> Aut(P).
inline Subgroup t_normalizer(const Subgroup& G_full, const Subgroup& P,
                             const std::vector<GroupAutomorphism>& T) {
  verify_closed(T);
  const GroupPtr& G = P.parent();
  Subgroup NGP = normalizer_in(G_full, P);
  std::set<std::vector<int>> tables;
  for (const auto& t : T)
    tables.insert(t.table());
  std::vector<int> m;
  for (int x : NGP.members())
    if (tables.count(GroupAutomorphism::conjugation(P, x).table()))
      m.push_back(x);
  return Subgroup(G, std::move(m));
}

/// N_G(PN/N): the stabilizer of the image of P in G/N, computed without
/// building the quotient as N_G(PN).
inline Subgroup bar_normalizer(const Subgroup& G_full, const Subgroup& N,
                               const Subgroup& P) {
  require(N.is_normal_in(G_full), "bar_normalizer: N is not normal in G");
  Subgroup PN = subgroup_product(P, N);
  return normalizer(G_full, PN);
}

} // namespace ebq
