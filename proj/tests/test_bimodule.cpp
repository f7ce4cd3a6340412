#include <doctest.h>

#include "fixtures.hpp"
#include "levikit/bimodule.hpp"

using namespace levikit;
using namespace levikit::testing;

namespace {

std::vector<BimoduleElement> canonical_transversal(const CoveringBimodule& b) {
  std::vector<BimoduleElement> out;
  for (const auto& cls : b.cohn_classes()) {
    int edge = cls.front().edge;
    const Diagram& d = b.diagram();
    Elem id_src = d.group_at(d.edges[edge].source)->identity();
    Elem id_tgt = d.group_at(d.edges[edge].target)->identity();
    out.push_back(BimoduleElement{edge, id_src, id_tgt});
  }
  return out;
}

}  // namespace

TEST_CASE("element counts match the closed form") {
  for (const Diagram& d : all_fixtures()) {
    CoveringBimodule b(d);
    size_t expected = 0;
    for (const Edge& e : d.edges) {
      expected += (d.group_at(e.source)->order() / e.hom.domain.order()) *
                  d.group_at(e.target)->order();
    }
    CHECK(b.elements().size() == expected);
  }
  CHECK(CoveringBimodule(hnn_diagram()).elements().size() == 8);
}

TEST_CASE("canonicalization") {
  Diagram d = hnn_diagram();
  CoveringBimodule b(d);
  // a2 . x = x . a2: the left factor folds through the edge hom
  CHECK(b.canonicalize(2, 0, 0) == BimoduleElement{0, 0, 2});
  CHECK(b.canonicalize(3, 0, 1) == BimoduleElement{0, 1, 3});
  for (const Diagram& fd : all_fixtures()) {
    CoveringBimodule fb(fd);
    for (int x = 0; x < static_cast<int>(fd.edges.size()); ++x) {
      const Edge& e = fd.edges[x];
      for (Elem g = 0; g < fd.group_at(e.source)->order(); ++g) {
        for (Elem h = 0; h < fd.group_at(e.target)->order(); ++h) {
          BimoduleElement c = fb.canonicalize(g, x, h);
          CHECK(fb.canonicalize(c.left, c.edge, c.right) == c);  // idempotent
          CHECK(e.t_plus.contains_rep(c.left));
        }
      }
    }
  }
}

TEST_CASE("action laws") {
  for (const Diagram& d : all_fixtures()) {
    CoveringBimodule b(d);
    for (const auto& el : b.elements()) {
      const GroupPtr& ge = d.group_at(b.source_vertex(el));
      const GroupPtr& gf = d.group_at(b.target_vertex(el));
      for (Elem g1 = 0; g1 < ge->order(); ++g1) {
        for (Elem g2 = 0; g2 < ge->order(); ++g2) {
          CHECK(b.act_left(g1, b.act_left(g2, el)) ==
                b.act_left(ge->mul(g1, g2), el));
        }
        for (Elem h = 0; h < gf->order(); ++h) {
          CHECK(b.act_right(b.act_left(g1, el), h) ==
                b.act_left(g1, b.act_right(el, h)));
        }
      }
      for (Elem h1 = 0; h1 < gf->order(); ++h1) {
        for (Elem h2 = 0; h2 < gf->order(); ++h2) {
          CHECK(b.act_right(b.act_right(el, h1), h2) ==
                b.act_right(el, gf->mul(h1, h2)));
        }
      }
      CHECK(b.act_left(ge->identity(), el) == el);
      CHECK(b.act_right(el, gf->identity()) == el);
    }
  }
}

TEST_CASE("freeness") {
  for (const Diagram& d : all_fixtures()) {
    CoveringBimodule b(d);
    CHECK(b.is_right_free());
    bool all_iso = classify(d) != DiagramKind::Generic;
    CHECK(b.is_bifree() == all_iso);
  }
  CHECK_FALSE(CoveringBimodule(collapse_diagram()).is_bifree());
}

TEST_CASE("cohn classes are the per-edge orbits") {
  for (const Diagram& d : all_fixtures()) {
    CoveringBimodule b(d);
    auto classes = b.cohn_classes();
    REQUIRE(classes.size() == d.edges.size());
    for (const auto& cls : classes) {
      for (const auto& el : cls) CHECK(el.edge == cls.front().edge);
    }
    size_t total = 0;
    for (const auto& cls : classes) total += cls.size();
    CHECK(total == b.elements().size());
  }
}

TEST_CASE("round trip through the canonical transversal") {
  for (const Diagram& d : all_fixtures()) {
    CoveringBimodule b(d);
    Diagram back = diagram_from_bimodule(b, canonical_transversal(b));
    CHECK(same_diagram(d, back));
  }
}

TEST_CASE("round trip through a shifted transversal is conjugate") {
  Diagram d = hnn_diagram();
  CoveringBimodule b(d);
  // replace the canonical representative by [a, x, a3]
  Diagram back = diagram_from_bimodule(b, {BimoduleElement{0, 1, 3}});
  CHECK(diagrams_conjugate(d, back, {0}).has_value());
}

TEST_CASE("bad transversals") {
  Diagram d = free_diagram();
  CoveringBimodule b(d);
  try {
    diagram_from_bimodule(b, {BimoduleElement{0, 0, 0}});
    FAIL("expected NotATransversal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotATransversal);
  }
  try {
    diagram_from_bimodule(b, {BimoduleElement{0, 0, 0}, BimoduleElement{0, 0, 0}});
    FAIL("expected NotATransversal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotATransversal);
  }
}
