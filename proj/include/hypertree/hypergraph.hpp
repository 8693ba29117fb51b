#pragma once

#include <span>
#include <vector>

#include "hypertree/bitset.hpp"
#include "hypertree/errors.hpp"

namespace hypertree {

/// Immutable k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept in canonical form: each edge sorted ascending, the edge
/// list sorted lexicographically. Two hypergraphs are equal exactly when
/// (k, n, canonical edge list) coincide; equality is label-sensitive.
/// Every edge is additionally cached as an n-bit mask, and every vertex
/// carries the m-bit mask of edges containing it. All state is fixed at
/// construction, so concurrent readers need no synchronisation.
class Hypergraph {
 public:
  /// Validating constructor. Input edge order and within-edge order are
  /// irrelevant to the result.
  /// Throws ParamError (k < 2 or n < k), ArityError (an edge does not have
  /// exactly k distinct vertices), RangeError (vertex id outside [0,n)) or
  /// DuplicateEdgeError (two input edges equal as sets).
  Hypergraph(int k, int n, std::vector<std::vector<int>> edges);

  /// Trusted constructor: `edges` must already be canonical (each edge
  /// ascending, list lexicographically sorted, duplicate-free, in range).
  static Hypergraph from_canonical(int k, int n,
                                   std::vector<std::vector<int>> edges);

  int uniformity() const { return k_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(int i) const { return edges_[i]; }
  const Bitset& edge_mask(int i) const { return edge_masks_[i]; }
  /// Mask (over edge indices) of the edges containing vertex v.
  const Bitset& incident_edges(int v) const { return incident_[v]; }

  /// Membership test; `key` must be sorted ascending.
  bool has_edge_sorted(const std::vector<int>& key) const {
    return edge_index_of_sorted(key) >= 0;
  }
  /// Index of the canonical edge equal to `key` (sorted ascending), or -1.
  int edge_index_of_sorted(const std::vector<int>& key) const;

  bool is_vertex_isolated(int v) const { return incident_[v].none(); }
  std::vector<int> isolated_vertices() const;

  /// Copy without the edge at index i.
  Hypergraph without_edge(int i) const;
  /// Copy with one extra edge (must not already be present).
  Hypergraph with_edge(std::vector<int> extra) const;

  bool operator==(const Hypergraph& o) const {
    return k_ == o.k_ && n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  Hypergraph() = default;
  void build_masks();

  int k_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<Bitset> edge_masks_;
  std::vector<Bitset> incident_;
};

}  // namespace hypertree
