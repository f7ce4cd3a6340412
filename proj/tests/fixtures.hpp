#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "levikit/format.hpp"

namespace levikit::testing {

inline GroupPtr cyclic_group(int n, const std::string& gen = "a") {
  std::vector<std::string> names{"e"};
  for (int i = 1; i < n; ++i) {
    names.push_back(i == 1 ? gen : gen + std::to_string(i));
  }
  std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = names[(i + j) % n];
  }
  return group_from_table(names, rows);
}

inline GroupPtr trivial_group() { return cyclic_group(1); }

// S3 as permutations of {1,2,3}; names are cycle notation.
inline GroupPtr s3() {
  std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> names = {"id", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto compose = [&](int i, int j) {
    std::vector<int> p(3);
    for (int k = 0; k < 3; ++k) p[k] = perms[j][perms[i][k]];
    for (size_t k = 0; k < perms.size(); ++k) {
      if (perms[k] == p) return static_cast<int>(k);
    }
    return -1;
  };
  std::vector<std::vector<std::string>> rows(6, std::vector<std::string>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) rows[i][j] = names[compose(i, j)];
  }
  return group_from_table(names, rows);
}

inline Diagram free_diagram() {
  GroupPtr t = trivial_group();
  return build_diagram({{"e", t}, {"f", t}},
                       {{"a", "e", "f", {}, {}}, {"b", "f", "e", {}, {}}});
}

inline Diagram hnn_diagram() {
  GroupPtr c4 = cyclic_group(4);
  return build_diagram({{"v", c4}}, {{"x", "v", "v", {2}, {2}}});
}

inline Diagram amalgam_diagram() {
  return build_diagram({{"u", cyclic_group(2)}, {"w", cyclic_group(3, "b")}},
                       {{"x", "u", "w", {}, {}}});
}

inline Diagram collapse_diagram() {
  return build_diagram({{"u", cyclic_group(2)}, {"w", trivial_group()}},
                       {{"x", "u", "w", {1}, {0}}});
}

inline std::vector<Diagram> all_fixtures() {
  std::vector<Diagram> out;
  out.push_back(free_diagram());
  out.push_back(hnn_diagram());
  out.push_back(amalgam_diagram());
  out.push_back(collapse_diagram());
  return out;
}

inline Diagram load_fixture(const std::string& name) {
  std::ifstream in(std::string(LEVIKIT_FIXTURES_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

inline bool same_diagram(const Diagram& d1, const Diagram& d2) {
  if (d1.vertices.size() != d2.vertices.size() || d1.edges.size() != d2.edges.size()) {
    return false;
  }
  for (size_t i = 0; i < d1.vertices.size(); ++i) {
    const auto& g1 = d1.vertices[i].group;
    const auto& g2 = d2.vertices[i].group;
    if (d1.vertices[i].id != d2.vertices[i].id || g1->order() != g2->order()) {
      return false;
    }
    for (Elem a = 0; a < g1->order(); ++a) {
      for (Elem b = 0; b < g1->order(); ++b) {
        if (g1->mul(a, b) != g2->mul(a, b)) return false;
      }
    }
  }
  for (size_t i = 0; i < d1.edges.size(); ++i) {
    const auto& e1 = d1.edges[i];
    const auto& e2 = d2.edges[i];
    if (e1.id != e2.id || e1.source != e2.source || e1.target != e2.target ||
        !(e1.hom.domain == e2.hom.domain) || e1.hom.map != e2.hom.map) {
      return false;
    }
  }
  return true;
}

}  // namespace levikit::testing
