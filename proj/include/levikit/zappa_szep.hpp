#pragma once

#include <string>
#include <vector>

#include "levikit/tensor.hpp"

namespace levikit {

/// Path in the free category over the basis atoms.
struct AtomPath {
  int dom = -1;
  int cod = -1;
  std::vector<BasisAtom> atoms;

  auto operator<=>(const AtomPath&) const = default;
  int length() const { return static_cast<int>(atoms.size()); }
};

/// The self-similar action of the vertex groups on the free category of
/// basis atoms, with act/restrict tables on (group element, basis atom)
/// pairs and path extensions via the recursion rules.
class SelfSimilarAction {
 public:
  explicit SelfSimilarAction(const Diagram& diagram);

  const Diagram& diagram() const { return *diagram_; }
  const std::vector<BasisAtom>& basis() const { return basis_; }
  int basis_index(const BasisAtom& a) const;

  // Tables are public state so tests can fault-inject entries.
  // act_table[atom][g] is a basis index, restrict_table[atom][g] an element
  // of the group at the atom's target vertex.
  std::vector<std::vector<int>> act_table;
  std::vector<std::vector<Elem>> restrict_table;

  BasisAtom act_atom(Elem g, const BasisAtom& a) const;
  Elem restrict_atom(Elem g, const BasisAtom& a) const;

  AtomPath act(Elem g, const AtomPath& p) const;
  Elem restrict_along(Elem g, const AtomPath& p) const;

 private:
  const Diagram* diagram_;
  std::vector<BasisAtom> basis_;
};

SelfSimilarAction derive_action(const Diagram& d);

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;  // C1..C3, SS1..SS8 in order

  bool pass() const;
  const AxiomResult& find(const std::string& name) const;
};

/// Bounded-exhaustive verification of C1-C3 and SS1-SS8 over all group
/// elements and paths up to max_path_length.
AxiomReport check_axioms(const SelfSimilarAction& action, int max_path_length);

/// Element (path, group) of the Zappa-Szep product: the group element sits
/// at the path's codomain vertex.
struct ZSElement {
  AtomPath path;
  Elem group = 0;

  auto operator<=>(const ZSElement&) const = default;
};

ZSElement zs_identity(const SelfSimilarAction& action, int vertex);
ZSElement zs_compose(const SelfSimilarAction& action, const ZSElement& a,
                     const ZSElement& b);

/// Checks that (atoms, tail) <-> (path, group) is a functorial bijection:
/// composition commutes with it for all pairs with length <= max_length.
bool zs_iso_check(const Diagram& d, int max_length);

ZSElement zs_of_tensor(const TensorElement& u);
TensorElement tensor_of_zs(const ZSElement& z);

}  // namespace levikit
