#include "levikit/tensor.hpp"

#include <algorithm>
#include <map>

namespace levikit {

namespace {

int token_dom(const Diagram& d, const Token& t) {
  if (const auto* g = std::get_if<GroupToken>(&t)) return g->vertex;
  return d.edges[std::get<AtomToken>(t).edge].source;
}

}  // namespace

TensorElement normalize(const Diagram& d, const std::vector<Token>& tokens, int dom) {
  if (dom < 0 || dom >= static_cast<int>(d.vertices.size())) {
    throw Error(ErrorCode::NonComposable, "bad domain vertex");
  }
  TensorElement out;
  out.dom = dom;
  int cur = dom;
  Elem carry = d.group_at(cur)->identity();
  for (const Token& tok : tokens) {
    if (const auto* gt = std::get_if<GroupToken>(&tok)) {
      if (gt->vertex != cur) {
        throw Error(ErrorCode::NonComposable, "group token at wrong vertex");
      }
      carry = d.group_at(cur)->mul(carry, gt->g);
    } else {
      const auto& at = std::get<AtomToken>(tok);
      const Edge& e = d.edges[at.edge];
      if (e.source != cur) {
        throw Error(ErrorCode::NonComposable, "atom token does not compose");
      }
      Elem g = d.group_at(cur)->mul(carry, at.g);
      auto [t, a] = e.t_plus.factor(g);
      out.atoms.push_back(BasisAtom{at.edge, t});
      cur = e.target;
      carry = d.group_at(cur)->mul(e.hom.apply(a), at.h);
    }
  }
  out.cod = cur;
  out.tail = carry;
  return out;
}

TensorElement normalize(const Diagram& d, const std::vector<Token>& tokens) {
  if (tokens.empty()) {
    throw Error(ErrorCode::NonComposable, "cannot infer domain of empty token list");
  }
  return normalize(d, tokens, token_dom(d, tokens.front()));
}

TensorElement tensor_identity(const Diagram& d, int vertex) {
  return TensorElement{vertex, vertex, {}, d.group_at(vertex)->identity()};
}

TensorElement tensor_of_group(const Diagram& d, int vertex, Elem g) {
  return TensorElement{vertex, vertex, {}, g};
}

TensorElement tensor_of_atom(const Diagram& d, const BasisAtom& atom) {
  const Edge& e = d.edges[atom.edge];
  return TensorElement{e.source, e.target, {atom}, d.group_at(e.target)->identity()};
}

namespace {

std::vector<Token> tokens_of(const Diagram& d, const TensorElement& u) {
  std::vector<Token> toks;
  for (const auto& a : u.atoms) {
    toks.push_back(AtomToken{a.rep, a.edge, d.group_at(d.edges[a.edge].target)->identity()});
  }
  toks.push_back(GroupToken{u.cod, u.tail});
  return toks;
}

}  // namespace

TensorElement compose(const Diagram& d, const TensorElement& u, const TensorElement& v) {
  if (u.cod != v.dom) {
    throw Error(ErrorCode::NonComposable, "codomain/domain mismatch");
  }
  std::vector<Token> toks = tokens_of(d, u);
  auto vt = tokens_of(d, v);
  toks.insert(toks.end(), vt.begin(), vt.end());
  return normalize(d, toks, u.dom);
}

std::optional<InterleavingWitness> tensor_equal_with_witness(
    const Diagram& d, const std::vector<AtomToken>& xs, const std::vector<AtomToken>& ys) {
  if (xs.size() != ys.size() || xs.empty()) return std::nullopt;
  const size_t n = xs.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    if (d.edges[xs[i].edge].target != d.edges[xs[i + 1].edge].source ||
        d.edges[ys[i].edge].target != d.edges[ys[i + 1].edge].source) {
      throw Error(ErrorCode::NonComposable, "raw atom list does not compose");
    }
  }
  if (d.edges[xs[0].edge].source != d.edges[ys[0].edge].source) return std::nullopt;

  CoveringBimodule b(d);
  std::vector<BimoduleElement> xc, yc;
  for (const auto& t : xs) xc.push_back(b.canonicalize(t.g, t.edge, t.h));
  for (const auto& t : ys) yc.push_back(b.canonicalize(t.g, t.edge, t.h));

  InterleavingWitness w;
  BimoduleElement carried = xc[0];
  for (size_t i = 0; i + 1 < n; ++i) {
    // Unique g with carried * g = y_i (right action is free).
    const GroupPtr& gf = d.group_at(b.target_vertex(carried));
    if (b.target_vertex(carried) != b.target_vertex(yc[i])) return std::nullopt;
    std::optional<Elem> g;
    for (Elem cand = 0; cand < gf->order(); ++cand) {
      if (b.act_right(carried, cand) == yc[i]) {
        g = cand;
        break;
      }
    }
    if (!g) return std::nullopt;
    w.gs.push_back(*g);
    carried = b.act_left(gf->inv(*g), xc[i + 1]);
  }
  if (!(carried == yc[n - 1])) return std::nullopt;
  return w;
}

EquidivisibilityWitness equidivisibility_witness(const Diagram& d, const TensorElement& a,
                                                 const TensorElement& b,
                                                 const TensorElement& c,
                                                 const TensorElement& td) {
  TensorElement ab = compose(d, a, b);
  TensorElement cd = compose(d, c, td);
  if (!(ab == cd)) {
    throw Error(ErrorCode::PrecompositionMismatch, "composites differ");
  }

  auto solve = [&d](const TensorElement& longer, const TensorElement& shorter) {
    // interpolant u with longer = shorter * u
    const int k = shorter.length();
    std::vector<Token> toks;
    toks.push_back(GroupToken{shorter.cod, d.group_at(shorter.cod)->inv(shorter.tail)});
    for (int i = k; i < longer.length(); ++i) {
      const auto& at = longer.atoms[i];
      toks.push_back(AtomToken{at.rep, at.edge,
                               d.group_at(d.edges[at.edge].target)->identity()});
    }
    toks.push_back(GroupToken{longer.cod, longer.tail});
    return normalize(d, toks, shorter.cod);
  };

  if (a.length() >= c.length()) {
    TensorElement u = solve(a, c);
    if (!(compose(d, c, u) == a) || !(compose(d, u, b) == td)) {
      throw Error(ErrorCode::PrecompositionMismatch, "interpolant verification failed");
    }
    return EquidivisibilityWitness{EquidivisibilityWitness::Side::Left, std::move(u)};
  }
  TensorElement v = solve(c, a);
  if (!(compose(d, a, v) == c) || !(compose(d, v, td) == b)) {
    throw Error(ErrorCode::PrecompositionMismatch, "interpolant verification failed");
  }
  return EquidivisibilityWitness{EquidivisibilityWitness::Side::Right, std::move(v)};
}

std::vector<TensorElement> atomic_factorization(const Diagram& d, const TensorElement& u) {
  if (u.length() == 0) {
    throw Error(ErrorCode::Invertible, "invertible elements have no atomic factorization");
  }
  std::vector<TensorElement> out;
  for (int i = 0; i < u.length(); ++i) {
    TensorElement atom = tensor_of_atom(d, u.atoms[i]);
    if (i == u.length() - 1) atom.tail = u.tail;
    out.push_back(std::move(atom));
  }
  return out;
}

bool greens(const Diagram& d, const TensorElement& u, const TensorElement& v,
            GreensRelation rel) {
  switch (rel) {
    case GreensRelation::R: {
      if (u.dom != v.dom || u.cod != v.cod) return false;
      const GroupPtr& g = d.group_at(v.cod);
      for (Elem x = 0; x < g->order(); ++x) {
        if (compose(d, v, tensor_of_group(d, v.cod, x)) == u) return true;
      }
      return false;
    }
    case GreensRelation::L: {
      if (u.dom != v.dom || u.cod != v.cod) return false;
      const GroupPtr& g = d.group_at(v.dom);
      for (Elem x = 0; x < g->order(); ++x) {
        if (compose(d, tensor_of_group(d, v.dom, x), v) == u) return true;
      }
      return false;
    }
    case GreensRelation::J: {
      if (u.dom != v.dom || u.cod != v.cod) return false;
      const GroupPtr& gl = d.group_at(v.dom);
      const GroupPtr& gr = d.group_at(v.cod);
      for (Elem x = 0; x < gl->order(); ++x) {
        TensorElement xv = compose(d, tensor_of_group(d, v.dom, x), v);
        for (Elem y = 0; y < gr->order(); ++y) {
          if (compose(d, xv, tensor_of_group(d, v.cod, y)) == u) return true;
        }
      }
      return false;
    }
  }
  return false;
}

CategoryTruncation enumerate_truncation(const Diagram& d, int max_length) {
  CategoryTruncation trunc;
  trunc.diagram = &d;
  trunc.max_length = max_length;
  trunc.compose_fn = [&d](const TensorElement& u, const TensorElement& v) {
    return compose(d, u, v);
  };

  // Paths over basis atoms, breadth-first by length.
  std::vector<std::pair<int, std::vector<BasisAtom>>> paths;  // (cod, atoms)
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    paths.emplace_back(v, std::vector<BasisAtom>{});
  }
  size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    size_t end = paths.size();
    for (size_t i = begin; i < end; ++i) {
      for (int x = 0; x < static_cast<int>(d.edges.size()); ++x) {
        if (d.edges[x].source != paths[i].first) continue;
        for (Elem t : d.edges[x].t_plus.reps) {
          auto atoms = paths[i].second;
          atoms.push_back(BasisAtom{x, t});
          paths.emplace_back(d.edges[x].target, std::move(atoms));
        }
      }
    }
    begin = end;
  }

  for (const auto& [cod, atoms] : paths) {
    int dom = atoms.empty() ? cod : d.edges[atoms.front().edge].source;
    const GroupPtr& g = d.group_at(cod);
    for (Elem tail = 0; tail < g->order(); ++tail) {
      trunc.elements.push_back(TensorElement{dom, cod, atoms, tail});
    }
  }
  std::sort(trunc.elements.begin(), trunc.elements.end());
  return trunc;
}

namespace {

std::string describe(const Diagram& d, const TensorElement& u) { return to_string(d, u); }

}  // namespace

LeviReport verify_levi(const CategoryTruncation& trunc) {
  const Diagram& d = *trunc.diagram;
  LeviReport report;
  const auto& elems = trunc.elements;
  const int n = static_cast<int>(elems.size());

  // LF1 on all composable pairs.
  for (int i = 0; i < n && report.lf1; ++i) {
    for (int j = 0; j < n; ++j) {
      if (elems[i].cod != elems[j].dom) continue;
      TensorElement w = trunc.compose(elems[i], elems[j]);
      if (w.length() != elems[i].length() + elems[j].length()) {
        report.lf1 = false;
        if (report.counterexample.empty()) {
          report.counterexample = "LF1: lambda(" + describe(d, elems[i]) + " * " +
                                  describe(d, elems[j]) + ") != sum";
        }
        break;
      }
    }
  }

  // Direct invertibility search, independent of lambda.
  std::vector<char> invertible(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (elems[i].cod != elems[j].dom || elems[j].cod != elems[i].dom) continue;
      if (trunc.compose(elems[i], elems[j]) == tensor_identity(d, elems[i].dom) &&
          trunc.compose(elems[j], elems[i]) == tensor_identity(d, elems[j].dom)) {
        invertible[i] = 1;
        break;
      }
    }
  }
  for (int i = 0; i < n && report.lf2; ++i) {
    if ((elems[i].length() == 0) != static_cast<bool>(invertible[i])) {
      report.lf2 = false;
      if (report.counterexample.empty()) {
        report.counterexample = "LF2: " + describe(d, elems[i]);
      }
    }
  }

  // Mark elements admitting a factorization into two non-invertibles.
  std::map<TensorElement, char> splits;
  for (int i = 0; i < n; ++i) {
    if (invertible[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (invertible[j] || elems[i].cod != elems[j].dom) continue;
      splits[trunc.compose(elems[i], elems[j])] = 1;
    }
  }
  for (int i = 0; i < n && report.lf3; ++i) {
    bool is_atom = !invertible[i] && !splits.count(elems[i]);
    if ((elems[i].length() == 1) != is_atom) {
      report.lf3 = false;
      if (report.counterexample.empty()) {
        report.counterexample = "LF3: " + describe(d, elems[i]);
      }
    }
  }

  // Equidivisibility on all factorization quadruples.
  std::map<TensorElement, std::vector<std::pair<int, int>>> factorizations;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (elems[i].cod != elems[j].dom) continue;
      factorizations[trunc.compose(elems[i], elems[j])].emplace_back(i, j);
    }
  }
  for (const auto& [prod, pairs] : factorizations) {
    if (!report.equidivisible) break;
    for (const auto& [ai, bi] : pairs) {
      for (const auto& [ci, di] : pairs) {
        const TensorElement &a = elems[ai], &b = elems[bi], &c = elems[ci],
                            &dd = elems[di];
        bool ok = false;
        try {
          auto w = equidivisibility_witness(d, a, b, c, dd);
          if (w.side == EquidivisibilityWitness::Side::Left) {
            ok = trunc.compose(c, w.interpolant) == a &&
                 trunc.compose(w.interpolant, b) == dd;
          } else {
            ok = trunc.compose(a, w.interpolant) == c &&
                 trunc.compose(w.interpolant, dd) == b;
          }
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) {
          report.equidivisible = false;
          if (report.counterexample.empty()) {
            report.counterexample = "equidivisibility: " + describe(d, a) + " * " +
                                    describe(d, b) + " = " + describe(d, c) + " * " +
                                    describe(d, dd);
          }
          break;
        }
      }
      if (!report.equidivisible) break;
    }
  }
  return report;
}

CancellativityResult is_left_cancellative(const CategoryTruncation& trunc) {
  const auto& elems = trunc.elements;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (a.cod != b.dom) continue;
      TensorElement ab = trunc.compose(a, b);
      for (const auto& c : elems) {
        if (c.dom != b.dom || c == b) continue;
        if (trunc.compose(a, c) == ab) {
          return CancellativityResult{false, a, b, c};
        }
      }
    }
  }
  return CancellativityResult{};
}

CancellativityResult is_right_cancellative(const CategoryTruncation& trunc) {
  const auto& elems = trunc.elements;
  for (const auto& b : elems) {
    for (const auto& a : elems) {
      if (a.cod != b.dom) continue;
      TensorElement ab = trunc.compose(a, b);
      for (const auto& c : elems) {
        if (c.cod != b.dom || c.dom != a.dom || c == a) continue;
        if (trunc.compose(c, b) == ab) {
          // a * b = c * b with a != c
          return CancellativityResult{false, a, b, c};
        }
      }
    }
  }
  return CancellativityResult{};
}

std::vector<BasisAtom> atom_transversal(const CategoryTruncation& trunc) {
  const Diagram& d = *trunc.diagram;
  std::vector<BasisAtom> all;
  for (int x = 0; x < static_cast<int>(d.edges.size()); ++x) {
    for (Elem t : d.edges[x].t_plus.reps) all.push_back(BasisAtom{x, t});
  }
  std::sort(all.begin(), all.end());
  std::vector<BasisAtom> transversal;
  for (const auto& a : all) {
    bool related = false;
    for (const auto& rep : transversal) {
      if (greens(d, tensor_of_atom(d, a), tensor_of_atom(d, rep), GreensRelation::J)) {
        related = true;
        break;
      }
    }
    if (!related) transversal.push_back(a);
  }
  return transversal;
}

std::string to_string(const Diagram& d, const TensorElement& u) {
  std::string out;
  for (const auto& a : u.atoms) {
    const Edge& e = d.edges[a.edge];
    out += "[" + d.group_at(e.source)->name(a.rep) + "] " + e.id + " ";
  }
  out += "[" + d.group_at(u.cod)->name(u.tail) + "]";
  return out;
}

}  // namespace levikit
