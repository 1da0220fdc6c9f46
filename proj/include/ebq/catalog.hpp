#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebq/group.hpp"

namespace ebq {

/// Named permutation-group preset with canonical generators.
struct GroupPreset {
  std::string name;
  int degree;
  std::vector<std::vector<int>> generators;
  int order;
  std::string description;
};

inline const std::vector<GroupPreset>& catalog() {
  static const std::vector<GroupPreset> presets = {
      {"C2", 2, {{1, 0}}, 2, "cyclic of order 2"},
      {"C3", 3, {{1, 2, 0}}, 3, "cyclic of order 3"},
      {"C4", 4, {{1, 2, 3, 0}}, 4, "cyclic of order 4"},
      {"C6", 6, {{1, 2, 3, 4, 5, 0}}, 6, "cyclic of order 6"},
      {"V4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, 4, "Klein four group"},
      {"S3", 3, {{1, 0, 2}, {1, 2, 0}}, 6, "symmetric group on 3 points"},
      {"S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, 24, "symmetric group on 4 points"},
      {"A3", 3, {{1, 2, 0}}, 3, "alternating group on 3 points"},
      {"A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, 12, "alternating group on 4 points"},
      {"A5", 5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, 60,
       "alternating group on 5 points"},
      {"D8", 4, {{1, 2, 3, 0}, {2, 1, 0, 3}}, 8, "dihedral of order 8"},
      {"Q8", 8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}, 8,
       "quaternion group (regular representation)"},
      {"S3xC2", 5, {{1, 0, 2, 3, 4}, {1, 2, 0, 3, 4}, {0, 1, 2, 4, 3}}, 12,
       "direct product S3 x C2"},
      {"C3xC3", 6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}}, 9,
       "direct product C3 x C3"},
  };
  return presets;
}

inline std::optional<GroupPreset> find_preset(const std::string& name) {
  for (const auto& p : catalog())
    if (p.name == name)
      return p;
  return std::nullopt;
}

inline std::vector<Perm> perms_of(const std::vector<std::vector<int>>& images) {
  std::vector<Perm> out;
  for (const auto& v : images)
    out.push_back(Perm(v));
  return out;
}

} // namespace ebq
