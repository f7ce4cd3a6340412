#include "levikit/zappa_szep.hpp"

#include <algorithm>

namespace levikit {

SelfSimilarAction::SelfSimilarAction(const Diagram& diagram) : diagram_(&diagram) {
  for (int x = 0; x < static_cast<int>(diagram.edges.size()); ++x) {
    for (Elem t : diagram.edges[x].t_plus.reps) basis_.push_back(BasisAtom{x, t});
  }
  act_table.resize(basis_.size());
  restrict_table.resize(basis_.size());
}

int SelfSimilarAction::basis_index(const BasisAtom& a) const {
  auto it = std::find(basis_.begin(), basis_.end(), a);
  if (it == basis_.end()) {
    throw Error(ErrorCode::WrongComponent, "not a basis atom");
  }
  return static_cast<int>(it - basis_.begin());
}

BasisAtom SelfSimilarAction::act_atom(Elem g, const BasisAtom& a) const {
  return basis_[act_table[basis_index(a)][g]];
}

Elem SelfSimilarAction::restrict_atom(Elem g, const BasisAtom& a) const {
  return restrict_table[basis_index(a)][g];
}

AtomPath SelfSimilarAction::act(Elem g, const AtomPath& p) const {
  AtomPath out;
  out.dom = p.dom;
  Elem carry = g;
  int cur = p.dom;
  for (const auto& a : p.atoms) {
    out.atoms.push_back(act_atom(carry, a));
    carry = restrict_atom(carry, a);
    cur = diagram_->edges[a.edge].target;
  }
  out.cod = out.atoms.empty() ? p.cod
                              : diagram_->edges[out.atoms.back().edge].target;
  (void)cur;
  return out;
}

Elem SelfSimilarAction::restrict_along(Elem g, const AtomPath& p) const {
  Elem carry = g;
  for (const auto& a : p.atoms) carry = restrict_atom(carry, a);
  return carry;
}

SelfSimilarAction derive_action(const Diagram& d) {
  SelfSimilarAction action(d);
  for (size_t i = 0; i < action.basis().size(); ++i) {
    const BasisAtom& a = action.basis()[i];
    const Edge& e = d.edges[a.edge];
    const GroupPtr& ge = d.group_at(e.source);
    const GroupPtr& gf = d.group_at(e.target);
    action.act_table[i].resize(ge->order());
    action.restrict_table[i].resize(ge->order());
    for (Elem g = 0; g < ge->order(); ++g) {
      TensorElement nf = normalize(
          d, {GroupToken{e.source, g}, AtomToken{a.rep, a.edge, gf->identity()}},
          e.source);
      action.act_table[i][g] = action.basis_index(nf.atoms.front());
      action.restrict_table[i][g] = nf.tail;
    }
  }
  return action;
}

namespace {

std::vector<AtomPath> enumerate_paths(const Diagram& d, int max_length) {
  std::vector<AtomPath> paths;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    paths.push_back(AtomPath{v, v, {}});
  }
  size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    size_t end = paths.size();
    for (size_t i = begin; i < end; ++i) {
      for (int x = 0; x < static_cast<int>(d.edges.size()); ++x) {
        if (d.edges[x].source != paths[i].cod) continue;
        for (Elem t : d.edges[x].t_plus.reps) {
          AtomPath p = paths[i];
          p.atoms.push_back(BasisAtom{x, t});
          p.cod = d.edges[x].target;
          paths.push_back(std::move(p));
        }
      }
    }
    begin = end;
  }
  return paths;
}

AtomPath concat(const AtomPath& p, const AtomPath& q) {
  AtomPath out = p;
  out.atoms.insert(out.atoms.end(), q.atoms.begin(), q.atoms.end());
  out.cod = q.cod;
  return out;
}

std::string path_str(const Diagram& d, const AtomPath& p) {
  std::string s = d.vertices[p.dom].id + ":";
  for (const auto& a : p.atoms) {
    s += " " + d.edges[a.edge].id + "(" +
         d.group_at(d.edges[a.edge].source)->name(a.rep) + ")";
  }
  return s;
}

}  // namespace

bool AxiomReport::pass() const {
  return std::all_of(axioms.begin(), axioms.end(),
                     [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult& AxiomReport::find(const std::string& name) const {
  for (const auto& r : axioms) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown axiom " + name);
}

AxiomReport check_axioms(const SelfSimilarAction& action, int max_path_length) {
  const Diagram& d = action.diagram();
  AxiomReport report;
  for (const char* name :
       {"C1", "C2", "C3", "SS1", "SS2", "SS3", "SS4", "SS5", "SS6", "SS7", "SS8"}) {
    report.axioms.push_back(AxiomResult{name});
  }
  auto fail = [&report, &d](const std::string& name, Elem g, const AtomPath& p) {
    for (auto& r : report.axioms) {
      if (r.name == name && r.pass) {
        r.pass = false;
        r.witness = "g=" + d.group_at(p.dom)->name(g) + ", path " + path_str(d, p);
      }
    }
  };

  auto paths = enumerate_paths(d, max_path_length);
  for (const AtomPath& p : paths) {
    const GroupPtr& gv = d.group_at(p.dom);
    for (Elem g = 0; g < gv->order(); ++g) {
      AtomPath gp = action.act(g, p);
      Elem res = action.restrict_along(g, p);
      if (gp.dom != p.dom) fail("C1", g, p);
      if (gp.cod != p.cod) fail("C2", g, p);
      if (res < 0 || res >= d.group_at(p.cod)->order()) fail("C3", g, p);
      if (g == gv->identity()) {
        if (!(gp == p)) fail("SS1", g, p);                                // d(x).x = x
        if (res != d.group_at(p.cod)->identity()) fail("SS4", g, p);      // d(x)|_x = r(x)
      }
      if (p.length() == 0) {
        if (!(gp == p)) fail("SS3", g, p);   // g.r(g) = d(g)
        if (res != g) fail("SS5", g, p);     // g|_{r(g)} = g
      }
      for (Elem h = 0; h < gv->order(); ++h) {
        // SS2: (gh).p = g.(h.p); SS7: (gh)|_p = g|_{h.p} h|_p
        Elem gh = gv->mul(g, h);
        if (!(action.act(gh, p) == action.act(g, action.act(h, p)))) fail("SS2", gh, p);
        Elem lhs = action.restrict_along(gh, p);
        Elem rhs = d.group_at(p.cod)->mul(action.restrict_along(g, action.act(h, p)),
                                          action.restrict_along(h, p));
        if (lhs != rhs) fail("SS7", gh, p);
      }
    }
  }
  // SS6 / SS8 over composable path pairs within the bound.
  for (const AtomPath& p : paths) {
    for (const AtomPath& q : paths) {
      if (p.cod != q.dom || p.length() + q.length() > max_path_length) continue;
      AtomPath pq = concat(p, q);
      const GroupPtr& gv = d.group_at(p.dom);
      for (Elem g = 0; g < gv->order(); ++g) {
        if (action.restrict_along(g, pq) !=
            action.restrict_along(action.restrict_along(g, p), q)) {
          fail("SS6", g, pq);
        }
        AtomPath lhs = action.act(g, pq);
        AtomPath rhs =
            concat(action.act(g, p), action.act(action.restrict_along(g, p), q));
        if (!(lhs == rhs)) fail("SS8", g, pq);
      }
    }
  }
  return report;
}

ZSElement zs_identity(const SelfSimilarAction& action, int vertex) {
  return ZSElement{AtomPath{vertex, vertex, {}},
                   action.diagram().group_at(vertex)->identity()};
}

ZSElement zs_compose(const SelfSimilarAction& action, const ZSElement& a,
                     const ZSElement& b) {
  const Diagram& d = action.diagram();
  if (a.path.cod != b.path.dom) {
    throw Error(ErrorCode::NonComposable, "zs elements do not compose");
  }
  AtomPath moved = action.act(a.group, b.path);
  Elem res = action.restrict_along(a.group, b.path);
  return ZSElement{concat(a.path, moved), d.group_at(b.path.cod)->mul(res, b.group)};
}

ZSElement zs_of_tensor(const TensorElement& u) {
  return ZSElement{AtomPath{u.dom, u.cod, u.atoms}, u.tail};
}

TensorElement tensor_of_zs(const ZSElement& z) {
  return TensorElement{z.path.dom, z.path.cod, z.path.atoms, z.group};
}

bool zs_iso_check(const Diagram& d, int max_length) {
  SelfSimilarAction action = derive_action(d);
  CategoryTruncation trunc = enumerate_truncation(d, max_length);
  for (const auto& u : trunc.elements) {
    for (const auto& v : trunc.elements) {
      if (u.cod != v.dom) continue;
      TensorElement via_tensor = compose(d, u, v);
      ZSElement via_zs = zs_compose(action, zs_of_tensor(u), zs_of_tensor(v));
      if (!(zs_of_tensor(via_tensor) == via_zs)) return false;
    }
  }
  return true;
}

}  // namespace levikit
