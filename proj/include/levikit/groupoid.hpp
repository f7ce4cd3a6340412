#pragma once

#include <string>
#include <variant>
#include <vector>

#include "levikit/tensor.hpp"

namespace levikit {

struct GroupLetter {
  int vertex;
  Elem g;

  auto operator<=>(const GroupLetter&) const = default;
};

struct EdgeLetter {
  int edge;
  bool forward;

  auto operator<=>(const EdgeLetter&) const = default;
};

using Letter = std::variant<GroupLetter, EdgeLetter>;

/// Word over the doubled alphabet C u C^-1; composability of consecutive
/// letters is validated lazily by reduce.
struct GroupoidWord {
  int dom = -1;
  std::vector<Letter> letters;
};

int letter_dom(const Diagram& d, const Letter& l);
int letter_cod(const Diagram& d, const Letter& l);
int word_cod(const Diagram& d, const GroupoidWord& w);
GroupoidWord invert_word(const Diagram& d, const GroupoidWord& w);

/// Britton/Higgins normal form c0 y1 c1 ... yn cn: each c_{i-1} is a
/// T_plus rep when y_i is forward, a T_minus rep when backward; no pinches;
/// the final element is unconstrained.
struct NormalFormStep {
  Elem rep;
  EdgeLetter edge;

  auto operator<=>(const NormalFormStep&) const = default;
};

struct GroupoidNormalForm {
  int dom = -1;
  int cod = -1;
  std::vector<NormalFormStep> steps;
  Elem last = 0;

  auto operator<=>(const GroupoidNormalForm&) const = default;
  int edge_letters() const { return static_cast<int>(steps.size()); }
};

/// Left-to-right rewriting sweep with cancellation of pinches.
/// Throws NonComposable; RequiresIsomorphisms on a backward traversal of a
/// non-injective edge hom.
GroupoidNormalForm reduce(const Diagram& d, const GroupoidWord& w);

bool words_equal(const Diagram& d, const GroupoidWord& w1, const GroupoidWord& w2);

GroupoidWord word_of_normal_form(const Diagram& d, const GroupoidNormalForm& nf);

/// The functor from the category into its universal groupoid.
GroupoidWord iota(const Diagram& d, const TensorElement& u);

/// Injectivity of iota on the truncation plus preservation of composition.
bool embedding_check(const CategoryTruncation& trunc);

/// All normal forms with domain = codomain = base and at most max_edges
/// edge letters; canonical, hence duplicate-free.
std::vector<GroupoidNormalForm> vertex_group_words(const Diagram& d, int base,
                                                   int max_edges);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relators;
};

enum class PresentationShape { Hnn, Amalgam };

/// HNN: single-vertex diagrams, one stable letter per loop.
/// Amalgam: two vertices joined by one edge. Throws WrongShape otherwise.
Presentation emit_presentation(const Diagram& d, PresentationShape shape);

std::string to_string(const Diagram& d, const GroupoidNormalForm& nf);
std::string to_string(const Presentation& p);

}  // namespace levikit
