#include "levikit/bimodule.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace levikit {

CoveringBimodule::CoveringBimodule(const Diagram& diagram) : diagram_(&diagram) {
  for (int x = 0; x < static_cast<int>(diagram.edges.size()); ++x) {
    const Edge& e = diagram.edges[x];
    const GroupPtr& gf = diagram.group_at(e.target);
    for (Elem t : e.t_plus.reps) {
      for (Elem h = 0; h < gf->order(); ++h) {
        elements_.push_back(BimoduleElement{x, t, h});
      }
    }
  }
}

int CoveringBimodule::source_vertex(const BimoduleElement& b) const {
  return diagram_->edges[b.edge].source;
}

int CoveringBimodule::target_vertex(const BimoduleElement& b) const {
  return diagram_->edges[b.edge].target;
}

BimoduleElement CoveringBimodule::canonicalize(Elem g, int edge, Elem h) const {
  const Edge& e = diagram_->edges[edge];
  auto [t, a] = e.t_plus.factor(g);
  const GroupPtr& gf = diagram_->group_at(e.target);
  return BimoduleElement{edge, t, gf->mul(e.hom.apply(a), h)};
}

BimoduleElement CoveringBimodule::act_left(Elem g, const BimoduleElement& b) const {
  const Edge& e = diagram_->edges[b.edge];
  const GroupPtr& ge = diagram_->group_at(e.source);
  if (g < 0 || g >= ge->order()) {
    throw Error(ErrorCode::WrongComponent, "left actor outside source vertex group");
  }
  return canonicalize(ge->mul(g, b.left), b.edge, b.right);
}

BimoduleElement CoveringBimodule::act_right(const BimoduleElement& b, Elem h) const {
  const Edge& e = diagram_->edges[b.edge];
  const GroupPtr& gf = diagram_->group_at(e.target);
  if (h < 0 || h >= gf->order()) {
    throw Error(ErrorCode::WrongComponent, "right actor outside target vertex group");
  }
  return BimoduleElement{b.edge, b.left, gf->mul(b.right, h)};
}

bool CoveringBimodule::is_right_free() const {
  for (const auto& b : elements_) {
    const GroupPtr& gf = diagram_->group_at(target_vertex(b));
    for (Elem h = 0; h < gf->order(); ++h) {
      if (h != gf->identity() && act_right(b, h) == b) return false;
    }
  }
  return true;
}

bool CoveringBimodule::is_bifree() const {
  if (!is_right_free()) return false;
  for (const auto& b : elements_) {
    const GroupPtr& ge = diagram_->group_at(source_vertex(b));
    for (Elem g = 0; g < ge->order(); ++g) {
      if (g != ge->identity() && act_left(g, b) == b) return false;
    }
  }
  return true;
}

std::vector<std::vector<BimoduleElement>> CoveringBimodule::cohn_classes() const {
  std::set<BimoduleElement> unassigned(elements_.begin(), elements_.end());
  std::vector<std::vector<BimoduleElement>> classes;
  while (!unassigned.empty()) {
    BimoduleElement seed = *unassigned.begin();
    std::set<BimoduleElement> orbit{seed};
    std::deque<BimoduleElement> work{seed};
    while (!work.empty()) {
      BimoduleElement b = work.front();
      work.pop_front();
      const GroupPtr& ge = diagram_->group_at(source_vertex(b));
      const GroupPtr& gf = diagram_->group_at(target_vertex(b));
      for (Elem g = 0; g < ge->order(); ++g) {
        BimoduleElement n = act_left(g, b);
        if (orbit.insert(n).second) work.push_back(n);
      }
      for (Elem h = 0; h < gf->order(); ++h) {
        BimoduleElement n = act_right(b, h);
        if (orbit.insert(n).second) work.push_back(n);
      }
    }
    for (const auto& b : orbit) unassigned.erase(b);
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  // Order classes by edge, then least element; for B(D) the classes are
  // exactly the per-edge orbits.
  std::sort(classes.begin(), classes.end());
  return classes;
}

Diagram diagram_from_bimodule(const CoveringBimodule& b,
                              const std::vector<BimoduleElement>& transversal) {
  auto classes = b.cohn_classes();
  if (transversal.size() != classes.size()) {
    throw Error(ErrorCode::NotATransversal, "transversal size mismatch");
  }
  std::vector<const BimoduleElement*> rep_of_class(classes.size(), nullptr);
  for (const auto& t : transversal) {
    bool placed = false;
    for (size_t i = 0; i < classes.size(); ++i) {
      if (std::binary_search(classes[i].begin(), classes[i].end(), t)) {
        if (rep_of_class[i]) {
          throw Error(ErrorCode::NotATransversal, "class hit twice");
        }
        rep_of_class[i] = &t;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::NotATransversal, "element not in any class");
    }
  }
  for (auto* p : rep_of_class) {
    if (!p) throw Error(ErrorCode::NotATransversal, "class missed");
  }

  const Diagram& d = b.diagram();
  std::vector<VertexSpec> vspecs;
  for (const auto& v : d.vertices) vspecs.push_back(VertexSpec{v.id, v.group});

  std::vector<EdgeSpec> especs;
  for (size_t i = 0; i < classes.size(); ++i) {
    const BimoduleElement& x = *rep_of_class[i];
    const Edge& e = d.edges[x.edge];
    const GroupPtr& ge = d.group_at(e.source);
    const GroupPtr& gf = d.group_at(e.target);
    std::vector<Elem> dom, img;
    for (Elem g = 0; g < ge->order(); ++g) {
      // g x = x h for a unique h, when one exists (right freeness).
      BimoduleElement gx = b.act_left(g, x);
      for (Elem h = 0; h < gf->order(); ++h) {
        if (b.act_right(x, h) == gx) {
          dom.push_back(g);
          img.push_back(h);
          break;
        }
      }
    }
    especs.push_back(EdgeSpec{e.id, d.vertices[e.source].id, d.vertices[e.target].id,
                              std::move(dom), std::move(img)});
  }
  return build_diagram(vspecs, especs);
}

}  // namespace levikit
