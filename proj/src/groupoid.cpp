#include "levikit/groupoid.hpp"

#include <algorithm>
#include <map>

namespace levikit {

int letter_dom(const Diagram& d, const Letter& l) {
  if (const auto* g = std::get_if<GroupLetter>(&l)) return g->vertex;
  const auto& e = std::get<EdgeLetter>(l);
  return e.forward ? d.edges[e.edge].source : d.edges[e.edge].target;
}

int letter_cod(const Diagram& d, const Letter& l) {
  if (const auto* g = std::get_if<GroupLetter>(&l)) return g->vertex;
  const auto& e = std::get<EdgeLetter>(l);
  return e.forward ? d.edges[e.edge].target : d.edges[e.edge].source;
}

int word_cod(const Diagram& d, const GroupoidWord& w) {
  int cur = w.dom;
  for (const Letter& l : w.letters) {
    if (letter_dom(d, l) != cur) {
      throw Error(ErrorCode::NonComposable, "word letters do not compose");
    }
    cur = letter_cod(d, l);
  }
  return cur;
}

GroupoidWord invert_word(const Diagram& d, const GroupoidWord& w) {
  GroupoidWord out;
  out.dom = word_cod(d, w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (const auto* g = std::get_if<GroupLetter>(&*it)) {
      out.letters.push_back(GroupLetter{g->vertex, d.group_at(g->vertex)->inv(g->g)});
    } else {
      const auto& e = std::get<EdgeLetter>(*it);
      out.letters.push_back(EdgeLetter{e.edge, !e.forward});
    }
  }
  return out;
}

GroupoidNormalForm reduce(const Diagram& d, const GroupoidWord& w) {
  if (w.dom < 0 || w.dom >= static_cast<int>(d.vertices.size())) {
    throw Error(ErrorCode::NonComposable, "bad domain vertex");
  }
  int cur = w.dom;
  Elem carry = d.group_at(cur)->identity();
  std::vector<NormalFormStep> steps;
  // Reps popped by a cancellation merge back into the carry, so a single
  // left-to-right pass suffices; the edge-letter count never increases.
  for (const Letter& l : w.letters) {
    if (letter_dom(d, l) != cur) {
      throw Error(ErrorCode::NonComposable, "word letters do not compose");
    }
    if (const auto* gl = std::get_if<GroupLetter>(&l)) {
      carry = d.group_at(cur)->mul(carry, gl->g);
      continue;
    }
    const auto& el = std::get<EdgeLetter>(l);
    const Edge& e = d.edges[el.edge];
    if (el.forward) {
      auto [t, a] = e.t_plus.factor(carry);
      Elem image = e.hom.apply(a);
      cur = e.target;
      if (t == d.group_at(e.source)->identity() && !steps.empty() &&
          steps.back().edge == EdgeLetter{el.edge, false}) {
        // x^-1 a x  ->  phi(a), a in dom(phi)
        Elem s = steps.back().rep;
        steps.pop_back();
        carry = d.group_at(cur)->mul(s, image);
      } else {
        steps.push_back(NormalFormStep{t, el});
        carry = image;
      }
    } else {
      if (!e.hom.is_iso) {
        throw Error(ErrorCode::RequiresIsomorphisms,
                    "backward traversal of non-injective edge '" + e.id + "'");
      }
      auto [s, b] = e.t_minus.factor(carry);
      Elem preimage = e.hom.apply_inverse(b);
      cur = e.source;
      if (s == d.group_at(e.target)->identity() && !steps.empty() &&
          steps.back().edge == EdgeLetter{el.edge, true}) {
        // x b x^-1  ->  phi^-1(b), b in im(phi)
        Elem t = steps.back().rep;
        steps.pop_back();
        carry = d.group_at(cur)->mul(t, preimage);
      } else {
        steps.push_back(NormalFormStep{s, el});
        carry = preimage;
      }
    }
  }
  return GroupoidNormalForm{w.dom, cur, std::move(steps), carry};
}

bool words_equal(const Diagram& d, const GroupoidWord& w1, const GroupoidWord& w2) {
  if (w1.dom != w2.dom) {
    throw Error(ErrorCode::NonComposable, "words have different domains");
  }
  return reduce(d, w1) == reduce(d, w2);
}

GroupoidWord word_of_normal_form(const Diagram& d, const GroupoidNormalForm& nf) {
  GroupoidWord w;
  w.dom = nf.dom;
  int cur = nf.dom;
  for (const auto& step : nf.steps) {
    w.letters.push_back(GroupLetter{cur, step.rep});
    w.letters.push_back(step.edge);
    cur = letter_cod(d, Letter{step.edge});
  }
  w.letters.push_back(GroupLetter{cur, nf.last});
  return w;
}

GroupoidWord iota(const Diagram& d, const TensorElement& u) {
  GroupoidWord w;
  w.dom = u.dom;
  for (const auto& a : u.atoms) {
    w.letters.push_back(GroupLetter{d.edges[a.edge].source, a.rep});
    w.letters.push_back(EdgeLetter{a.edge, true});
  }
  w.letters.push_back(GroupLetter{u.cod, u.tail});
  return w;
}

bool embedding_check(const CategoryTruncation& trunc) {
  const Diagram& d = *trunc.diagram;
  for (const auto& e : d.edges) {
    if (!e.hom.is_iso) {
      throw Error(ErrorCode::RequiresIsomorphisms,
                  "embedding check needs a diagram of partial isomorphisms");
    }
  }
  std::vector<GroupoidNormalForm> forms;
  forms.reserve(trunc.elements.size());
  for (const auto& u : trunc.elements) forms.push_back(reduce(d, iota(d, u)));
  for (size_t i = 0; i < forms.size(); ++i) {
    for (size_t j = i + 1; j < forms.size(); ++j) {
      if (forms[i] == forms[j]) return false;
    }
  }
  for (const auto& u : trunc.elements) {
    for (const auto& v : trunc.elements) {
      if (u.cod != v.dom) continue;
      GroupoidWord cat = iota(d, u);
      const GroupoidWord vw = iota(d, v);
      cat.letters.insert(cat.letters.end(), vw.letters.begin(), vw.letters.end());
      if (!(reduce(d, cat) == reduce(d, iota(d, trunc.compose(u, v))))) return false;
    }
  }
  return true;
}

namespace {

void enumerate_forms(const Diagram& d, int base, int cur, int remaining,
                     std::vector<NormalFormStep>& steps,
                     std::vector<GroupoidNormalForm>& out) {
  if (cur == base) {
    const GroupPtr& g = d.group_at(base);
    for (Elem last = 0; last < g->order(); ++last) {
      out.push_back(GroupoidNormalForm{base, base, steps, last});
    }
  }
  if (remaining == 0) return;
  for (int x = 0; x < static_cast<int>(d.edges.size()); ++x) {
    const Edge& e = d.edges[x];
    for (bool forward : {true, false}) {
      if ((forward ? e.source : e.target) != cur) continue;
      if (!forward && !e.hom.is_iso) {
        throw Error(ErrorCode::RequiresIsomorphisms,
                    "enumeration needs a diagram of partial isomorphisms");
      }
      const CosetTransversal& t = forward ? e.t_plus : e.t_minus;
      bool pinch_risk =
          !steps.empty() && steps.back().edge == EdgeLetter{x, !forward};
      for (Elem rep : t.reps) {
        if (pinch_risk && rep == t.subgroup.parent->identity()) continue;
        steps.push_back(NormalFormStep{rep, EdgeLetter{x, forward}});
        enumerate_forms(d, base, forward ? e.target : e.source, remaining - 1, steps,
                        out);
        steps.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<GroupoidNormalForm> vertex_group_words(const Diagram& d, int base,
                                                   int max_edges) {
  std::vector<GroupoidNormalForm> out;
  std::vector<NormalFormStep> steps;
  enumerate_forms(d, base, base, max_edges, steps, out);
  return out;
}

namespace {

// "a a a" -> "a^3"
std::string pretty_word(const std::vector<std::string>& letters) {
  if (letters.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += " ";
    out += letters[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string element_word(const GroupPtr& g, const std::vector<Elem>& gens,
                         const std::vector<std::string>& gen_names, Elem x) {
  std::vector<std::string> letters;
  for (int i : word_in_generators(g, gens, x)) letters.push_back(gen_names[i]);
  return pretty_word(letters);
}

std::vector<Elem> whole_group_generators(const GroupPtr& g) {
  std::vector<Elem> all;
  for (Elem x = 0; x < g->order(); ++x) all.push_back(x);
  return minimal_generating_set(g, subgroup_closure(g, all));
}

// Relators for one vertex group over the given generators. Cyclic groups get
// a single power relator; otherwise we fall back to the table presentation.
void group_presentation(const GroupPtr& g, const std::string& prefix,
                        const std::vector<Elem>& gens,
                        std::vector<std::string>& gen_names, Presentation& p) {
  for (Elem x : gens) gen_names.push_back(prefix + g->name(x));
  for (const auto& n : gen_names) p.generators.push_back(n);
  if (gens.empty()) return;
  if (gens.size() == 1) {
    int ord = 1;
    Elem acc = gens[0];
    while (acc != g->identity()) {
      acc = g->mul(acc, gens[0]);
      ++ord;
    }
    p.relators.push_back(gen_names[0] + "^" + std::to_string(ord));
    return;
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      p.relators.push_back(gen_names[i] + " " + gen_names[j] + " = " +
                           element_word(g, gens, gen_names, g->mul(gens[i], gens[j])));
    }
  }
}

}  // namespace

Presentation emit_presentation(const Diagram& d, PresentationShape shape) {
  Presentation p;
  if (shape == PresentationShape::Hnn) {
    if (d.vertices.size() != 1) {
      throw Error(ErrorCode::WrongShape, "hnn shape needs a single vertex");
    }
    const GroupPtr& g = d.group_at(0);
    std::vector<Elem> gens = whole_group_generators(g);
    std::vector<std::string> gen_names;
    group_presentation(g, "", gens, gen_names, p);
    for (const Edge& e : d.edges) {
      p.generators.push_back(e.id);
      for (Elem a : minimal_generating_set(g, e.hom.domain)) {
        p.relators.push_back(e.id + "^-1 " + element_word(g, gens, gen_names, a) + " " +
                             e.id + " = " +
                             element_word(g, gens, gen_names, e.hom.apply(a)));
      }
    }
    return p;
  }

  if (d.vertices.size() != 2 || d.edges.size() != 1) {
    throw Error(ErrorCode::WrongShape, "amalgam shape needs two vertices and one edge");
  }
  const Edge& e = d.edges[0];
  if (!e.hom.is_iso) {
    throw Error(ErrorCode::WrongShape, "amalgam shape needs a partial isomorphism");
  }
  const GroupPtr& gs = d.group_at(e.source);
  const GroupPtr& gt = d.group_at(e.target);
  std::vector<Elem> sgens = whole_group_generators(gs);
  std::vector<Elem> tgens = whole_group_generators(gt);
  // Prefix names only when the two generator sets share names.
  bool collide = false;
  for (Elem a : sgens) {
    for (Elem b : tgens) collide = collide || gs->name(a) == gt->name(b);
  }
  std::string ps = collide ? d.vertices[e.source].id + "." : "";
  std::string pt = collide ? d.vertices[e.target].id + "." : "";
  std::vector<std::string> sgen_names, tgen_names;
  group_presentation(gs, ps, sgens, sgen_names, p);
  group_presentation(gt, pt, tgens, tgen_names, p);
  for (Elem a : minimal_generating_set(gs, e.hom.domain)) {
    p.relators.push_back(element_word(gs, sgens, sgen_names, a) + " = " +
                         element_word(gt, tgens, tgen_names, e.hom.apply(a)));
  }
  return p;
}

std::string to_string(const Diagram& d, const GroupoidNormalForm& nf) {
  std::string out;
  int cur = nf.dom;
  for (const auto& step : nf.steps) {
    out += "[" + d.group_at(cur)->name(step.rep) + "] ";
    out += d.edges[step.edge.edge].id;
    if (!step.edge.forward) out += "^-1";
    out += " ";
    cur = letter_cod(d, Letter{step.edge});
  }
  out += "[" + d.group_at(cur)->name(nf.last) + "]";
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "< ";
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += p.relators[i];
  }
  out += " >";
  return out;
}

}  // namespace levikit
