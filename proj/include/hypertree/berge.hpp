#pragma once

#include <optional>
#include <vector>

#include "hypertree/hypergraph.hpp"
#include "hypertree/recognition.hpp"

namespace hypertree {

/// Hypergraph with edges of arbitrary (nonzero) sizes, for the classical
/// Berge-connectivity cross-checks. Canonical storage like Hypergraph.
class GeneralHypergraph {
 public:
  GeneralHypergraph(int n, std::vector<std::vector<int>> edges);
  static GeneralHypergraph from_uniform(const Hypergraph& h);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(int i) const { return edges_[i]; }
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incident_;
};

/// Equivalence classes of Berge-path connectivity: classes ordered by their
/// smallest vertex, vertices ascending. Isolated vertices form singletons.
std::vector<std::vector<int>> berge_components(const GeneralHypergraph& g);

/// Alternating witness (v_1, e_1, v_2, ..., v_l, e_l, v_1) with distinct
/// vertices and distinct edges, consecutive vertices inside the joining edge.
struct BergeCycleWitness {
  std::vector<int> vertices;      // v_1..v_l
  std::vector<int> edge_indices;  // e_1..e_l
  int length() const { return static_cast<int>(edge_indices.size()); }
};

/// First Berge-cycle of length >= min_length (>= 2: a loop is never a
/// cycle), or absent. Depth-first over alternating sequences.
std::optional<BergeCycleWitness> find_berge_cycle(
    const GeneralHypergraph& g, int min_length = 2,
    const SearchLimits& limits = {});

inline bool has_berge_cycle(const GeneralHypergraph& g,
                            const SearchLimits& limits = {}) {
  return find_berge_cycle(g, 2, limits).has_value();
}

/// lhs = sum(|e|-1), rhs = n - p over the Berge components. The identity
/// lhs == rhs holds exactly for Berge-cycle-free hypergraphs; both sides and
/// the cycle search are computed independently and the biconditional is
/// verified, not assumed.
struct BergeForestIdentity {
  long long lhs = 0;
  long long rhs = 0;
  bool cycle_free = false;
};
BergeForestIdentity berge_forest_identity(const GeneralHypergraph& g,
                                          const SearchLimits& limits = {});

/// Applicable when there are no loops, no Berge-cycles of length >= 3 (the
/// length-2 ones are permitted) and all pairwise edge intersections have at
/// most 2 vertices; then sum(|e|-2) < n - p is verified.
struct LovaszInequality {
  bool applicable = false;
  long long lhs = 0;
  long long rhs = 0;
};
LovaszInequality lovasz_inequality(const GeneralHypergraph& g,
                                   const SearchLimits& limits = {});

}  // namespace hypertree
