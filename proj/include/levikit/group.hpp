#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "levikit/error.hpp"

namespace levikit {

// Group elements are indices into a multiplication table.
using Elem = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its multiplication table. All axioms are checked
/// exhaustively at construction.
class FiniteGroup {
 public:
  int order() const { return static_cast<int>(names_.size()); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  const std::string& name(Elem a) const { return names_[a]; }
  // -1 if no element has that name.
  Elem index_of(const std::string& name) const;

  bool is_abelian() const;

  friend GroupPtr group_from_table(const std::vector<std::string>& names,
                                   const std::vector<std::vector<std::string>>& rows);

 private:
  FiniteGroup() = default;

  std::vector<std::string> names_;
  std::vector<std::vector<Elem>> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
};

/// Validates names and table rows, locates identity and inverses.
/// Throws NotAssociative, NoIdentity, NoInverse, DuplicateName.
GroupPtr group_from_table(const std::vector<std::string>& names,
                          const std::vector<std::vector<std::string>>& rows);

/// Subgroup as a sorted member list; always contains the identity.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> members;  // sorted

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elem g) const;
  bool operator==(const Subgroup& other) const { return members == other.members; }
};

/// Smallest subgroup of G containing the given generators.
Subgroup subgroup_closure(const GroupPtr& group, const std::vector<Elem>& generators);

enum class CosetSide { Left, Right };

/// Coset representatives: identity coset first (represented by the identity),
/// other cosets by their least element index, ordered by that least element.
struct CosetTransversal {
  Subgroup subgroup;
  CosetSide side;
  std::vector<Elem> reps;
  std::vector<int> rep_index_of;  // element -> index into reps

  // g = rep * member (Left) or member * rep (Right); member in the subgroup.
  Elem rep_of(Elem g) const { return reps[rep_index_of[g]]; }
  std::pair<Elem, Elem> factor(Elem g) const;  // (rep, member)
  bool contains_rep(Elem g) const { return rep_of(g) == g; }
};

CosetTransversal left_transversal(const GroupPtr& group, const Subgroup& subgroup);
CosetTransversal right_transversal(const GroupPtr& group, const Subgroup& subgroup);

/// Surjective homomorphism between designated subgroups of two groups.
struct PartialHom {
  GroupPtr source_group;
  GroupPtr target_group;
  Subgroup domain;
  Subgroup image;
  std::vector<Elem> map;  // indexed by source element, -1 outside domain
  bool is_iso = false;

  Elem apply(Elem g) const;
  // Only valid when is_iso.
  Elem apply_inverse(Elem h) const;
};

/// Extends generator images multiplicatively over the domain closure and
/// verifies the homomorphism property exhaustively.
/// Throws NotAHomomorphism, ImageNotClosed.
PartialHom partial_hom(const GroupPtr& src, const GroupPtr& tgt,
                       const std::vector<Elem>& domain_gens,
                       const std::vector<Elem>& gen_images);

/// Identity partial hom on a subgroup of G.
PartialHom identity_hom(const GroupPtr& group, const Subgroup& subgroup);

/// Smallest generating set of a subgroup, found by breadth-first search over
/// subset sizes; deterministic (lexicographically least at the winning size).
std::vector<Elem> minimal_generating_set(const GroupPtr& group, const Subgroup& subgroup);

/// Expresses g as a product of the given generators (indices into gens),
/// shortest word first. Empty word is the identity.
std::vector<int> word_in_generators(const GroupPtr& group, const std::vector<Elem>& gens,
                                    Elem g);

}  // namespace levikit
