#include <doctest.h>

#include "fixtures.hpp"
#include "levikit/diagram.hpp"

using namespace levikit;
using namespace levikit::testing;

TEST_CASE("build_diagram wires homs and transversals") {
  Diagram d = hnn_diagram();
  CHECK(d.vertices.size() == 1);
  CHECK(d.edges.size() == 1);
  CHECK(d.vertex_index("v") == 0);
  CHECK(d.edge_index("x") == 0);
  CHECK(d.edge_index("y") == -1);
  const Edge& e = d.edges[0];
  CHECK(e.source == 0);
  CHECK(e.target == 0);
  CHECK(e.hom.is_iso);
  CHECK(e.t_plus.reps == std::vector<Elem>{0, 1});
  CHECK(e.t_minus.reps == std::vector<Elem>{0, 1});
}

TEST_CASE("build_diagram failures") {
  GroupPtr t = trivial_group();
  try {
    build_diagram({{"e", t}}, {{"a", "e", "f", {}, {}}});
    FAIL("expected DanglingEdge");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DanglingEdge);
  }
  try {
    build_diagram({{"e", t}, {"e", t}}, {});
    FAIL("expected DuplicateName");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DuplicateName);
  }
  try {
    build_diagram({{"e", t}}, {{"a", "e", "e", {}, {}}, {"a", "e", "e", {}, {}}});
    FAIL("expected DuplicateName");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DuplicateName);
  }
}

TEST_CASE("classification") {
  CHECK(classify(free_diagram()) == DiagramKind::Serre);
  CHECK(classify(hnn_diagram()) == DiagramKind::Serre);
  CHECK(classify(amalgam_diagram()) == DiagramKind::Serre);
  CHECK(classify(collapse_diagram()) == DiagramKind::Generic);

  GroupPtr t = trivial_group();
  Diagram disconnected = build_diagram({{"e", t}, {"f", t}}, {});
  CHECK(classify(disconnected) == DiagramKind::PartialIsomorphisms);

  CHECK(std::string(diagram_kind_name(DiagramKind::Serre)) == "serre");
  CHECK(std::string(diagram_kind_name(DiagramKind::Generic)) == "generic");
  CHECK(std::string(diagram_kind_name(DiagramKind::PartialIsomorphisms)) ==
        "partial-isomorphisms");
}

TEST_CASE("classification is stable under edge relabeling") {
  GroupPtr c4 = cyclic_group(4);
  Diagram d1 = build_diagram({{"v", c4}}, {{"x", "v", "v", {2}, {2}}});
  Diagram d2 = build_diagram({{"v", c4}}, {{"zz", "v", "v", {2}, {2}}});
  CHECK(classify(d1) == classify(d2));
}

TEST_CASE("self-conjugacy with identity witness") {
  for (const Diagram& d : all_fixtures()) {
    std::vector<int> idcorr;
    for (size_t i = 0; i < d.edges.size(); ++i) idcorr.push_back(static_cast<int>(i));
    auto w = diagrams_conjugate(d, d, idcorr);
    REQUIRE(w.has_value());
    // identity conjugators are found first by the search
    for (const auto& ec : w->per_edge) {
      CHECK(ec.source_conjugator == 0);
      CHECK(ec.target_conjugator == 0);
    }
  }
}

TEST_CASE("conjugate S3 subdiagrams") {
  GroupPtr g = s3();
  // <(12)> and <(13)> are conjugate order-2 subgroups of S3.
  Diagram d1 = build_diagram({{"v", g}}, {{"x", "v", "v", {1}, {1}}});
  Diagram d2 = build_diagram({{"v", g}}, {{"x", "v", "v", {2}, {2}}});
  auto w = diagrams_conjugate(d1, d2, {0});
  REQUIRE(w.has_value());
  Elem a = w->per_edge[0].source_conjugator;
  Elem b = w->per_edge[0].target_conjugator;
  // alpha maps <(12)> onto <(13)> and intertwines the identity maps
  CHECK(g->mul(g->mul(a, 1), g->inv(a)) == 2);
  CHECK(g->mul(g->mul(b, 1), g->inv(b)) == 2);

  // symmetry
  CHECK(diagrams_conjugate(d2, d1, {0}).has_value());
}

TEST_CASE("non-conjugate diagrams") {
  GroupPtr c4 = cyclic_group(4);
  // domain subgroups of different orders are never conjugate
  Diagram d1 = build_diagram({{"v", c4}}, {{"x", "v", "v", {2}, {2}}});
  Diagram d2 = build_diagram({{"v", c4}}, {{"x", "v", "v", {1}, {1}}});
  CHECK_FALSE(diagrams_conjugate(d1, d2, {0}).has_value());
  CHECK_FALSE(diagrams_conjugate(d2, d1, {0}).has_value());

  // same subgroup but incompatible maps: identity vs inversion on C4's <a>
  Diagram d3 = build_diagram({{"v", c4}}, {{"x", "v", "v", {1}, {3}}});
  CHECK_FALSE(diagrams_conjugate(d2, d3, {0}).has_value());
}

TEST_CASE("conjugacy is symmetric on the fixture corpus") {
  for (const Diagram& d : all_fixtures()) {
    std::vector<int> idcorr;
    for (size_t i = 0; i < d.edges.size(); ++i) idcorr.push_back(static_cast<int>(i));
    CHECK(diagrams_conjugate(d, d, idcorr).has_value());
  }
}
