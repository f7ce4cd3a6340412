#include "levikit/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace levikit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::ImageNotClosed: return "ImageNotClosed";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::WrongComponent: return "WrongComponent";
    case ErrorCode::NotATransversal: return "NotATransversal";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::PrecompositionMismatch: return "PrecompositionMismatch";
    case ErrorCode::Invertible: return "Invertible";
    case ErrorCode::RequiresIsomorphisms: return "RequiresIsomorphisms";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Elem FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < order(); ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a) {
    for (Elem b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

GroupPtr group_from_table(const std::vector<std::string>& names,
                          const std::vector<std::vector<std::string>>& rows) {
  const int n = static_cast<int>(names.size());
  if (n == 0) {
    throw Error(ErrorCode::NoIdentity, "empty group");
  }
  std::map<std::string, Elem> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorCode::DuplicateName, "duplicate element name '" + names[i] + "'");
    }
  }
  if (static_cast<int>(rows.size()) != n) {
    throw Error(ErrorCode::ParseError, "table must have one row per element");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->names_ = names;
  g->table_.assign(n, std::vector<Elem>(n, -1));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorCode::ParseError, "table row " + std::to_string(i) + " has wrong width");
    }
    for (int j = 0; j < n; ++j) {
      auto it = index.find(rows[i][j]);
      if (it == index.end()) {
        throw Error(ErrorCode::ParseError, "unknown element '" + rows[i][j] + "' in table");
      }
      g->table_[i][j] = it->second;
    }
  }

  // Locate a two-sided identity.
  Elem identity = -1;
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      ok = g->table_[e][a] == a && g->table_[a][e] == a;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw Error(ErrorCode::NoIdentity, "table has no two-sided identity");
  }
  g->identity_ = identity;

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (g->table_[g->table_[a][b]][c] != g->table_[a][g->table_[b][c]]) {
          throw Error(ErrorCode::NotAssociative,
                      "(" + names[a] + "*" + names[b] + ")*" + names[c] + " != " +
                          names[a] + "*(" + names[b] + "*" + names[c] + ")");
        }
      }
    }
  }

  g->inverse_.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g->table_[a][b] == identity && g->table_[b][a] == identity) {
        g->inverse_[a] = b;
        break;
      }
    }
    if (g->inverse_[a] < 0) {
      throw Error(ErrorCode::NoInverse, "element '" + names[a] + "' has no inverse");
    }
  }
  return g;
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup subgroup_closure(const GroupPtr& group, const std::vector<Elem>& generators) {
  std::set<Elem> closed;
  closed.insert(group->identity());
  std::deque<Elem> work(generators.begin(), generators.end());
  for (Elem g : generators) closed.insert(g);
  while (!work.empty()) {
    Elem a = work.front();
    work.pop_front();
    for (Elem b : std::vector<Elem>(closed.begin(), closed.end())) {
      for (Elem p : {group->mul(a, b), group->mul(b, a), group->inv(a)}) {
        if (closed.insert(p).second) work.push_back(p);
      }
    }
  }
  return Subgroup{group, std::vector<Elem>(closed.begin(), closed.end())};
}

namespace {

CosetTransversal make_transversal(const GroupPtr& group, const Subgroup& subgroup,
                                  CosetSide side) {
  const int n = group->order();
  std::vector<int> coset_least(n, -1);  // element -> least element of its coset
  for (Elem g = 0; g < n; ++g) {
    if (coset_least[g] >= 0) continue;
    std::vector<Elem> coset;
    for (Elem h : subgroup.members) {
      coset.push_back(side == CosetSide::Left ? group->mul(g, h) : group->mul(h, g));
    }
    Elem least = *std::min_element(coset.begin(), coset.end());
    for (Elem c : coset) coset_least[c] = least;
  }

  // Identity coset is represented by the identity itself and comes first;
  // the rest by least element, in index order.
  Elem id = group->identity();
  std::vector<Elem> reps{id};
  std::set<Elem> seen{coset_least[id]};
  for (Elem g = 0; g < n; ++g) {
    if (seen.insert(coset_least[g]).second) reps.push_back(coset_least[g]);
  }

  CosetTransversal t{subgroup, side, reps, std::vector<int>(n, -1)};
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    for (Elem h : subgroup.members) {
      Elem g = side == CosetSide::Left ? group->mul(reps[i], h) : group->mul(h, reps[i]);
      t.rep_index_of[g] = i;
    }
  }
  return t;
}

}  // namespace

std::pair<Elem, Elem> CosetTransversal::factor(Elem g) const {
  const auto& group = subgroup.parent;
  Elem rep = rep_of(g);
  Elem member = side == CosetSide::Left ? group->mul(group->inv(rep), g)
                                        : group->mul(g, group->inv(rep));
  return {rep, member};
}

CosetTransversal left_transversal(const GroupPtr& group, const Subgroup& subgroup) {
  return make_transversal(group, subgroup, CosetSide::Left);
}

CosetTransversal right_transversal(const GroupPtr& group, const Subgroup& subgroup) {
  return make_transversal(group, subgroup, CosetSide::Right);
}

Elem PartialHom::apply(Elem g) const {
  if (g < 0 || g >= static_cast<int>(map.size()) || map[g] < 0) {
    throw Error(ErrorCode::WrongComponent, "element outside partial hom domain");
  }
  return map[g];
}

Elem PartialHom::apply_inverse(Elem h) const {
  if (!is_iso) {
    throw Error(ErrorCode::RequiresIsomorphisms, "partial hom is not injective");
  }
  for (Elem g : domain.members) {
    if (map[g] == h) return g;
  }
  throw Error(ErrorCode::WrongComponent, "element outside partial hom image");
}

PartialHom partial_hom(const GroupPtr& src, const GroupPtr& tgt,
                       const std::vector<Elem>& domain_gens,
                       const std::vector<Elem>& gen_images) {
  if (domain_gens.size() != gen_images.size()) {
    throw Error(ErrorCode::NotAHomomorphism, "generator/image count mismatch");
  }
  Subgroup domain = subgroup_closure(src, domain_gens);

  // Extend multiplicatively over the closure.
  std::vector<Elem> map(src->order(), -1);
  map[src->identity()] = tgt->identity();
  for (size_t i = 0; i < domain_gens.size(); ++i) {
    Elem g = domain_gens[i], h = gen_images[i];
    if (map[g] >= 0 && map[g] != h) {
      throw Error(ErrorCode::NotAHomomorphism,
                  "conflicting images for generator " + src->name(g));
    }
    map[g] = h;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (Elem a : domain.members) {
      if (map[a] < 0) continue;
      for (Elem b : domain.members) {
        if (map[b] < 0) continue;
        Elem ab = src->mul(a, b);
        Elem im = tgt->mul(map[a], map[b]);
        if (map[ab] < 0) {
          map[ab] = im;
          progress = true;
        } else if (map[ab] != im) {
          throw Error(ErrorCode::NotAHomomorphism,
                      "map(" + src->name(a) + "*" + src->name(b) + ") is inconsistent");
        }
      }
    }
  }
  for (Elem g : domain.members) {
    if (map[g] < 0) {
      throw Error(ErrorCode::NotAHomomorphism,
                  "generators do not determine image of " + src->name(g));
    }
  }

  // Full exhaustive verification over the domain.
  for (Elem a : domain.members) {
    for (Elem b : domain.members) {
      if (map[src->mul(a, b)] != tgt->mul(map[a], map[b])) {
        throw Error(ErrorCode::NotAHomomorphism,
                    "map(" + src->name(a) + "*" + src->name(b) + ") != map(" +
                        src->name(a) + ")*map(" + src->name(b) + ")");
      }
    }
  }

  std::set<Elem> image_set;
  for (Elem g : domain.members) image_set.insert(map[g]);
  Subgroup image{tgt, std::vector<Elem>(image_set.begin(), image_set.end())};
  Subgroup image_closed = subgroup_closure(tgt, image.members);
  if (!(image == image_closed)) {
    throw Error(ErrorCode::ImageNotClosed, "image is not a subgroup");
  }

  PartialHom hom{src, tgt, std::move(domain), std::move(image), std::move(map), false};
  hom.is_iso = hom.domain.order() == hom.image.order();
  return hom;
}

PartialHom identity_hom(const GroupPtr& group, const Subgroup& subgroup) {
  return partial_hom(group, group, subgroup.members, subgroup.members);
}

std::vector<Elem> minimal_generating_set(const GroupPtr& group, const Subgroup& subgroup) {
  if (subgroup.order() == 1) return {};
  std::vector<Elem> candidates = subgroup.members;
  // Try subsets in increasing size, lexicographic within a size.
  for (size_t k = 1; k <= candidates.size(); ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Elem> gens;
      for (size_t i : idx) gens.push_back(candidates[i]);
      if (subgroup_closure(group, gens) == subgroup) return gens;
      // next combination
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && idx[i] == candidates.size() - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return subgroup.members;  // unreachable for valid subgroups
}

std::vector<int> word_in_generators(const GroupPtr& group, const std::vector<Elem>& gens,
                                    Elem g) {
  std::map<Elem, std::vector<int>> word;
  word[group->identity()] = {};
  std::deque<Elem> work{group->identity()};
  while (!work.empty()) {
    Elem a = work.front();
    work.pop_front();
    if (a == g) return word[a];
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
      Elem b = group->mul(a, gens[i]);
      if (!word.count(b)) {
        auto w = word[a];
        w.push_back(i);
        word[b] = std::move(w);
        work.push_back(b);
      }
    }
  }
  throw Error(ErrorCode::WrongComponent, "element not generated by given set");
}

}  // namespace levikit
