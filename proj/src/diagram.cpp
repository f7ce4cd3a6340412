#include "levikit/diagram.hpp"

#include <algorithm>
#include <set>

namespace levikit {

int Diagram::vertex_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (vertices[i].id == id) return i;
  }
  return -1;
}

int Diagram::edge_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].id == id) return i;
  }
  return -1;
}

Diagram build_diagram(const std::vector<VertexSpec>& vertices,
                      const std::vector<EdgeSpec>& edges) {
  Diagram d;
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v.id).second) {
      throw Error(ErrorCode::DuplicateName, "duplicate vertex id '" + v.id + "'");
    }
    d.vertices.push_back(Vertex{v.id, v.group});
  }
  seen.clear();
  for (const auto& e : edges) {
    if (!seen.insert(e.id).second) {
      throw Error(ErrorCode::DuplicateName, "duplicate edge id '" + e.id + "'");
    }
    int src = d.vertex_index(e.source);
    int tgt = d.vertex_index(e.target);
    if (src < 0 || tgt < 0) {
      throw Error(ErrorCode::DanglingEdge,
                  "edge '" + e.id + "' references unknown vertex '" +
                      (src < 0 ? e.source : e.target) + "'");
    }
    PartialHom hom = partial_hom(d.group_at(src), d.group_at(tgt), e.domain_gens,
                                 e.gen_images);
    CosetTransversal t_plus = left_transversal(d.group_at(src), hom.domain);
    CosetTransversal t_minus = left_transversal(d.group_at(tgt), hom.image);
    d.edges.push_back(
        Edge{e.id, src, tgt, std::move(hom), std::move(t_plus), std::move(t_minus)});
  }
  return d;
}

namespace {

bool weakly_connected(const Diagram& d) {
  const int n = static_cast<int>(d.vertices.size());
  if (n == 0) return false;
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : d.edges) {
      for (int w : {e.source == v ? e.target : -1, e.target == v ? e.source : -1}) {
        if (w >= 0 && !visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return std::all_of(visited.begin(), visited.end(), [](char c) { return c != 0; });
}

}  // namespace

DiagramKind classify(const Diagram& d) {
  bool all_iso = std::all_of(d.edges.begin(), d.edges.end(),
                             [](const Edge& e) { return e.hom.is_iso; });
  if (!all_iso) return DiagramKind::Generic;
  if (weakly_connected(d)) return DiagramKind::Serre;
  return DiagramKind::PartialIsomorphisms;
}

const char* diagram_kind_name(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::Generic: return "generic";
    case DiagramKind::PartialIsomorphisms: return "partial-isomorphisms";
    case DiagramKind::Serre: return "serre";
  }
  return "unknown";
}

namespace {

std::vector<Elem> conjugate_subgroup(const GroupPtr& g, const std::vector<Elem>& members,
                                     Elem a) {
  std::vector<Elem> out;
  out.reserve(members.size());
  for (Elem m : members) out.push_back(g->mul(g->mul(a, m), g->inv(a)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<ConjugacyWitness> diagrams_conjugate(
    const Diagram& d1, const Diagram& d2, const std::vector<int>& edge_correspondence) {
  if (d1.vertices.size() != d2.vertices.size() ||
      edge_correspondence.size() != d1.edges.size() ||
      d1.edges.size() != d2.edges.size()) {
    return std::nullopt;
  }
  for (size_t v = 0; v < d1.vertices.size(); ++v) {
    if (d1.vertices[v].group->order() != d2.vertices[v].group->order()) {
      return std::nullopt;
    }
  }

  ConjugacyWitness witness;
  for (size_t i = 0; i < d1.edges.size(); ++i) {
    const Edge& x = d1.edges[i];
    const Edge& y = d2.edges[edge_correspondence[i]];
    if (x.source != y.source || x.target != y.target) return std::nullopt;
    const GroupPtr& ge = d1.group_at(x.source);
    const GroupPtr& gf = d1.group_at(x.target);

    bool found = false;
    for (Elem a = 0; a < ge->order() && !found; ++a) {
      if (conjugate_subgroup(ge, x.hom.domain.members, a) != y.hom.domain.members) {
        continue;
      }
      for (Elem b = 0; b < gf->order() && !found; ++b) {
        if (conjugate_subgroup(gf, x.hom.image.members, b) != y.hom.image.members) {
          continue;
        }
        // beta(phi_x(g)) == phi_y(alpha(g)) for all g in dom phi_x
        bool ok = true;
        for (Elem g : x.hom.domain.members) {
          Elem lhs = gf->mul(gf->mul(b, x.hom.apply(g)), gf->inv(b));
          Elem rhs = y.hom.apply(ge->mul(ge->mul(a, g), ge->inv(a)));
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
        if (ok) {
          witness.per_edge.push_back(EdgeConjugation{a, b});
          found = true;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return witness;
}

}  // namespace levikit
