#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "levikit/diagram.hpp"

namespace levikit {

/// The class [left, edge, right], stored canonically: left is a T_plus
/// representative, right is arbitrary in the target vertex group.
struct BimoduleElement {
  int edge;
  Elem left;
  Elem right;

  auto operator<=>(const BimoduleElement&) const = default;
};

/// The covering bimodule B(D) of a diagram: the canonical representatives of
/// all equivalence classes of triples (g, x, h), acted on by the vertex
/// groups on both sides.
class CoveringBimodule {
 public:
  explicit CoveringBimodule(const Diagram& diagram);

  const Diagram& diagram() const { return *diagram_; }
  const std::vector<BimoduleElement>& elements() const { return elements_; }

  int source_vertex(const BimoduleElement& b) const;
  int target_vertex(const BimoduleElement& b) const;

  /// Canonical representative of the class of the raw triple (g, x, h).
  BimoduleElement canonicalize(Elem g, int edge, Elem h) const;

  BimoduleElement act_left(Elem g, const BimoduleElement& b) const;
  BimoduleElement act_right(const BimoduleElement& b, Elem h) const;

  bool is_right_free() const;
  bool is_bifree() const;

  /// Orbit partition under the two-sided action (the Cohn relation).
  std::vector<std::vector<BimoduleElement>> cohn_classes() const;

 private:
  const Diagram* diagram_;
  std::vector<BimoduleElement> elements_;
};

/// Recovers a diagram from a bimodule plus a transversal of its Cohn classes
/// (one element per class, in class order). The recovered edge keeps the id
/// of the class's underlying edge. Throws NotATransversal.
Diagram diagram_from_bimodule(const CoveringBimodule& b,
                              const std::vector<BimoduleElement>& transversal);

}  // namespace levikit
