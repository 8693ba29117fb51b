#pragma once

#include <random>
#include <utility>
#include <vector>

#include "hypertree/berge.hpp"
#include "hypertree/bounds.hpp"
#include "hypertree/hypergraph.hpp"

// Test-side helpers: small fixtures, seeded instance samplers and
// independent re-implementations used as oracles against the library.
namespace hypertree::testing {

/// 3-uniform hypertree on 5 vertices with a disconnected tight line graph:
/// edges {0,1,2},{1,2,3},{0,3,4},{1,2,4}.
Hypergraph sample_hypertree_order5();

/// m distinct random k-subsets of {0..n-1}.
Hypergraph random_hypergraph(std::mt19937& rng, int n, int k, int m);

/// Rejection-samples a nonempty semicycle-free instance.
Hypergraph sample_semicycle_free(std::mt19937& rng, int n, int k);

// ordinary-graph checks for the k = 2 degeneration
bool graph_connected(int n, const std::vector<std::pair<int, int>>& edges);
bool graph_acyclic(int n, const std::vector<std::pair<int, int>>& edges);

/// Replays the deletion order of a phi table: at every step the recorded
/// chain must be a valid chain of the then-current hypergraph, end in the
/// deleted edge, and admit no extension at either end. Maximality is
/// re-derived from the definition, not from the library's search.
void check_phi_replay(const Hypergraph& h, const PhiTable& table);

/// Berge-path existence via alternating depth-first search.
bool berge_path_exists(const GeneralHypergraph& g, int u, int v);

}  // namespace hypertree::testing
