#pragma once

#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

/// Graph on edge indices; two edges are adjacent exactly when they share
/// k-1 vertices. Never reflexive.
struct TightLineGraph {
  int node_count = 0;
  std::vector<Bitset> adjacency;  // adjacency[i] = neighbour mask over edge indices

  bool adjacent(int i, int j) const { return adjacency[i].test(j); }
  /// Number of unordered adjacent pairs.
  int edge_pair_count() const;
  /// Component label per node, labels dense and ordered by smallest member.
  std::vector<int> component_labels() const;
  int component_count() const;
};

TightLineGraph tight_line_graph(const Hypergraph& h);

/// Components of the tight line graph together with their vertex projections.
struct ClassDecomposition {
  std::vector<std::vector<int>> components;  // edge indices per component
  std::vector<Bitset> classes;               // vertex set covered by each component
  long long sigma = 0;                       // sum of class sizes
  int class_count = 0;
  int min_classes_per_vertex = 0;            // over all vertices
};

/// Throws IsolatedVertexError when some vertex lies in no edge.
ClassDecomposition class_decomposition(const Hypergraph& h);

/// Verdicts of the two counting inequalities that relate sigma, the class
/// count l, the minimum cover count r and the order n:
///   (1)  sigma >= r*n
///   (2)  sigma >= n + r - 1 + (l - r)*k
/// plus the window test  (r-1)n/(k-1) < l-1 < (r-1)(k-1)  that marks the
/// only parameter region where a chain-connected hypergraph may have fewer
/// than n-(k-1) edges.
struct ClassInequalityDiagnostic {
  int n = 0;
  int k = 0;
  long long sigma = 0;
  int class_count = 0;
  int min_classes_per_vertex = 0;
  bool sigma_ge_rn = false;
  bool sigma_ge_cover_sum = false;
  bool counterexample_window = false;
};

struct SearchLimits;  // recognition.hpp

/// Preconditions: h chain-connected, no isolated vertex, and every class
/// smaller than n. A class equal to V makes the inequalities vacuous and
/// raises PreconditionError.
ClassInequalityDiagnostic check_class_inequalities(const ClassDecomposition& d,
                                                   const Hypergraph& h);

}  // namespace hypertree
