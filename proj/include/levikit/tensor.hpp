#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "levikit/bimodule.hpp"

namespace levikit {

/// Basis atom of the co-ordinatization: the canonical bimodule element
/// [rep, edge, identity] where rep is a T_plus representative.
struct BasisAtom {
  int edge;
  Elem rep;

  auto operator<=>(const BasisAtom&) const = default;
};

/// Normal form of an element of T(B(D)): a composable list of basis atoms
/// followed by one group element in the codomain vertex group. Equality in
/// the category is structural equality of normal forms.
struct TensorElement {
  int dom = -1;  // vertex index
  int cod = -1;
  std::vector<BasisAtom> atoms;
  Elem tail = 0;

  auto operator<=>(const TensorElement&) const = default;
  int length() const { return static_cast<int>(atoms.size()); }
};

struct GroupToken {
  int vertex;
  Elem g;
};

/// Raw atom (g, x, h): g in the source group of edge x, h in the target.
struct AtomToken {
  Elem g;
  int edge;
  Elem h;
};

using Token = std::variant<GroupToken, AtomToken>;

/// Left-to-right normalization sweep. `dom` is required when tokens is empty
/// or starts with an atom token (it is then checked for consistency).
TensorElement normalize(const Diagram& d, const std::vector<Token>& tokens, int dom);
TensorElement normalize(const Diagram& d, const std::vector<Token>& tokens);

TensorElement tensor_identity(const Diagram& d, int vertex);
TensorElement tensor_of_group(const Diagram& d, int vertex, Elem g);
TensorElement tensor_of_atom(const Diagram& d, const BasisAtom& atom);

TensorElement compose(const Diagram& d, const TensorElement& u, const TensorElement& v);

inline int length(const TensorElement& u) { return u.length(); }

/// Interleaving witness of Lemma-style tensor equality: invertibles
/// g_1..g_{n-1} with y_1 = x_1 g_1, y_i = g_{i-1}^-1 x_i g_i, y_n =
/// g_{n-1}^-1 x_n. Empty for n = 1.
struct InterleavingWitness {
  std::vector<Elem> gs;
};

/// Decides equality of two raw atom tensors of the same length and, when
/// equal, reconstructs the interleaving sequence.
std::optional<InterleavingWitness> tensor_equal_with_witness(
    const Diagram& d, const std::vector<AtomToken>& xs, const std::vector<AtomToken>& ys);

struct EquidivisibilityWitness {
  // Left: a = c*u and d = u*b.  Right: c = a*v and b = v*d.
  enum class Side { Left, Right } side;
  TensorElement interpolant;
};

/// Given ab = cd, produces the diagonal interpolant, verified by
/// recomposition. Throws PrecompositionMismatch when ab != cd.
EquidivisibilityWitness equidivisibility_witness(const Diagram& d, const TensorElement& a,
                                                 const TensorElement& b,
                                                 const TensorElement& c,
                                                 const TensorElement& td);

/// Splits u into length(u) atoms whose composite is u; the tail is absorbed
/// into the last atom. Throws Invertible when length is 0.
std::vector<TensorElement> atomic_factorization(const Diagram& d, const TensorElement& u);

enum class GreensRelation { L, R, J };

bool greens(const Diagram& d, const TensorElement& u, const TensorElement& v,
            GreensRelation rel);

/// Finite window onto the category: all elements with length <= max_length.
/// `compose_fn` defaults to the tensor composition; tests may substitute a
/// faulty one.
struct CategoryTruncation {
  const Diagram* diagram;
  int max_length;
  std::vector<TensorElement> elements;
  std::function<TensorElement(const TensorElement&, const TensorElement&)> compose_fn;

  TensorElement compose(const TensorElement& u, const TensorElement& v) const {
    return compose_fn(u, v);
  }
};

CategoryTruncation enumerate_truncation(const Diagram& d, int max_length);

struct LeviReport {
  bool lf1 = true;
  bool lf2 = true;
  bool lf3 = true;
  bool equidivisible = true;
  std::string counterexample;

  bool pass() const { return lf1 && lf2 && lf3 && equidivisible; }
};

/// Exhaustively checks LF1 on all composable pairs, LF2/LF3 against direct
/// invertibility/atom searches, and equidivisibility on all factorization
/// quadruples within the truncation.
LeviReport verify_levi(const CategoryTruncation& trunc);

struct CancellativityResult {
  bool cancellative = true;
  // For a right-cancellation failure: a*b = c*b with a != c.
  TensorElement witness_a, witness_b, witness_c;
};

CancellativityResult is_left_cancellative(const CategoryTruncation& trunc);
CancellativityResult is_right_cancellative(const CategoryTruncation& trunc);

/// One atom per J-class of atoms: the least basis atom of each class.
/// For B(D) this is the identity-rep atom of each edge; cross-checked
/// against the Green's relation.
std::vector<BasisAtom> atom_transversal(const CategoryTruncation& trunc);

std::string to_string(const Diagram& d, const TensorElement& u);

}  // namespace levikit
