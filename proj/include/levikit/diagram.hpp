#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levikit/group.hpp"

namespace levikit {

struct Vertex {
  std::string id;
  GroupPtr group;
};

/// Directed edge e ->x f with a partial homomorphism from G_e to G_f,
/// plus the left transversals of its domain and image subgroups.
struct Edge {
  std::string id;
  int source = -1;  // vertex index
  int target = -1;
  PartialHom hom;
  CosetTransversal t_plus;   // left transversal of hom.domain in source group
  CosetTransversal t_minus;  // left transversal of hom.image in target group
};

/// A directed multigraph with a finite group per vertex and a surjective
/// partial homomorphism per edge.
struct Diagram {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int vertex_index(const std::string& id) const;  // -1 if absent
  int edge_index(const std::string& id) const;
  const GroupPtr& group_at(int vertex) const { return vertices[vertex].group; }
};

struct VertexSpec {
  std::string id;
  GroupPtr group;
};

struct EdgeSpec {
  std::string id;
  std::string source;
  std::string target;
  std::vector<Elem> domain_gens;
  std::vector<Elem> gen_images;
};

/// Validates specs, builds the partial homs and transversals.
/// Throws DanglingEdge and anything partial_hom throws.
Diagram build_diagram(const std::vector<VertexSpec>& vertices,
                      const std::vector<EdgeSpec>& edges);

enum class DiagramKind { Generic, PartialIsomorphisms, Serre };

DiagramKind classify(const Diagram& d);
const char* diagram_kind_name(DiagramKind kind);

/// Per-edge pair of conjugating elements: alpha(g) = a g a^-1 on the source
/// group, beta(h) = b h b^-1 on the target group.
struct EdgeConjugation {
  Elem source_conjugator;
  Elem target_conjugator;
};

struct ConjugacyWitness {
  std::vector<EdgeConjugation> per_edge;  // indexed like the correspondence
};

/// Tests conjugacy of two diagrams under a caller-supplied edge
/// correspondence: edge_correspondence[i] pairs d1.edges[i] with
/// d2.edges[edge_correspondence[i]]. Returns nullopt when the exhaustive
/// search finds no witness.
std::optional<ConjugacyWitness> diagrams_conjugate(
    const Diagram& d1, const Diagram& d2, const std::vector<int>& edge_correspondence);

}  // namespace levikit
