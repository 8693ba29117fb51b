#pragma once

#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

/// Edges {i,...,i+k-1} for 0 <= i <= n-k; exactly n-(k-1) edges.
Hypergraph tight_path(int n, int k);

/// Centres 0..k-2; one edge per leaf w in {k-1,...,n-1}; n-(k-1) edges.
Hypergraph tight_star(int n, int k);

/// Centres 0..l-1, rim l..n-1 traversed cyclically in windows of k-l;
/// n-l edges. Requires n > k > l >= 1. A (k-1)-flower coincides with the
/// tight star vertex for vertex.
Hypergraph l_flower(int n, int k, int l);

inline Hypergraph flower(int n, int k) { return l_flower(n, k, 1); }

/// The 7-point Steiner triple system with lines {i, i+1, i+3} mod 7.
Hypergraph fano_plane();

/// Three k-edges on k+3 vertices pairwise overlapping in k-3 vertices:
/// blocks X={0,1,2}, Y={3,4,5}, Z={6,7,8} and a shared core {9,...,k+2};
/// edges X|core|Y, X|core|Z, Y|core|Z. Chain-connected with
/// 3 < n-(k-1) = 4 edges required, so it undercuts the lower bound.
/// Requires k >= 6.
Hypergraph small_counterexample(int k);

/// k even, k >= 6: c = k-2 clusters of size k/2 (cluster i occupies ids
/// [i*k/2,(i+1)*k/2)), one edge per unordered cluster pair; n = k(k-2)/2
/// and binom(c,2) < n-(k-1) is re-checked on every call.
Hypergraph cluster_counterexample(int k);

/// k odd, k >= 7: c clusters of size (k-1)/2 plus one extra vertex (id n-1)
/// shared by all edges; edge = cluster pair + the extra vertex. c is the
/// largest value with binom(c,2) < n-(k-1) where n = c(k-1)/2 + 1. The
/// extra vertex must be shared: two distinct extras never lie in a common
/// edge, which would break chain-connectivity. Throws ConstraintInfeasible
/// when no c >= 2 qualifies.
Hypergraph odd_cluster_counterexample(int k);

/// 3-uniform, 3n vertices (x_i -> i-1, y_i -> n+i-1, z_i -> 2n+i-1):
/// the tight cycle on the x-run plus, per i, edges {x_{i-1},x_i,y_i} and
/// {z_i,x_i,x_{i+1}} (cyclic indices); 3n edges. Chain-connected but full
/// of semicycles. Requires n >= 5.
Hypergraph non_hypertree_cc(int n);

/// 3-uniform doubling: keeps the base vertices 0..n-1 and edges, adds one
/// vertex per length-n bit string (id n + value, bit 1 = most significant)
/// and, for every pair u,w of strings, the edge {v, u, w} where v is the
/// position of their first differing bit (0-based vertex id). Adds exactly
/// binom(2^n, 2) edges. Requires a 3-uniform base with n <= 14.
Hypergraph b_construction(const Hypergraph& base);

/// One step of the recursive build-up: adds a fresh vertex (id = old n)
/// and the given edges through it, returning the extension only when it is
/// again an edge-minimal hypertree. Throws PreconditionError when the input
/// is not an edge-minimal hypertree, FreshVertexMissing when some new edge
/// omits the fresh vertex, and NotEdgeMinimalAfterExtension when the result
/// fails the check.
Hypergraph recursive_extend(const Hypergraph& h,
                            std::vector<std::vector<int>> new_edges);

}  // namespace hypertree
