#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypertree/hypergraph.hpp"
#include "hypertree/line_graph.hpp"
#include "hypertree/witness.hpp"

namespace hypertree {

/// Node-expansion budget shared by every search below. Exhausting it raises
/// BudgetExceeded instead of returning a possibly wrong answer.
struct SearchLimits {
  std::uint64_t max_expansions = 10'000'000;
};

/// First chain (by deterministic search order) whose sequence contains both
/// u and v, or absent when no non-self-intersecting chain does. Searches
/// start from every edge in every vertex order, in canonical order, and
/// extend at the right end in ascending vertex order, so the returned
/// witness is reproducible.
std::optional<ChainWitness> find_chain(const Hypergraph& h, int u, int v,
                                       const SearchLimits& limits = {});

/// True when every unordered vertex pair lies on a common chain. Runs one
/// global sweep over all chains, marking covered pairs, with an early exit
/// once every pair is covered.
bool is_chain_connected(const Hypergraph& h, const SearchLimits& limits = {});

/// Like is_chain_connected but records, per vertex pair, the first chain
/// that covered it.
struct PairChainTable {
  int n = 0;
  bool connected = false;
  std::vector<std::optional<ChainWitness>> witnesses;  // index u*n+v, u<v
  const std::optional<ChainWitness>& at(int u, int v) const {
    return witnesses[u < v ? u * n + v : v * n + u];
  }
};
PairChainTable chain_connectivity_table(const Hypergraph& h,
                                        const SearchLimits& limits = {});

/// Non-self-intersecting semicycle, or absent when the hypergraph is
/// semicycle-free (searching non-self-intersecting witnesses is complete:
/// a shortest semicycle never repeats an interior vertex).
std::optional<SemicycleWitness> find_semicycle(const Hypergraph& h,
                                               const SearchLimits& limits = {});

/// Closed tight walk whose windows are pairwise distinct edges; vertices may
/// repeat. Absent exactly when no such cycle exists.
std::optional<CycleWitness> find_tight_cycle(const Hypergraph& h,
                                             const SearchLimits& limits = {});

bool is_hypertree(const Hypergraph& h, const SearchLimits& limits = {});

/// Requires a hypertree; true when removing any single edge breaks
/// chain-connectivity. Throws NotAHypertreeError.
bool is_edge_minimal(const Hypergraph& h, const SearchLimits& limits = {});

/// Requires a hypertree; true when adding any absent k-set creates a
/// semicycle. Throws NotAHypertreeError.
bool is_edge_maximal(const Hypergraph& h, const SearchLimits& limits = {});

/// Maximum chain length (in edges). Throws EmptyHypergraphError.
int max_chain_length(const Hypergraph& h, const SearchLimits& limits = {});

/// Vertices contained in every edge. Throws EmptyHypergraphError.
std::vector<int> focus_vertices(const Hypergraph& h);

/// True when every l-subset of the vertices lies in exactly one edge
/// (1 <= l <= k). When true the edge count necessarily equals
/// binom(n,l)/binom(k,l); that identity is re-checked internally.
bool is_l_geometric(const Hypergraph& h, int l);

// --- exhaustive sequence-space oracles -------------------------------------
// Desk-scale searches over sequences that MAY revisit vertices, bounded by
// max_sequence_length (pass -1 for the default n+k). They exist as
// independent cross-checks for the restricted searches above.

bool has_semicycle_general(const Hypergraph& h, int max_sequence_length = -1,
                           const SearchLimits& limits = {});
bool has_self_intersecting_chain(const Hypergraph& h,
                                 int max_sequence_length = -1,
                                 const SearchLimits& limits = {});
bool is_chain_connected_general(const Hypergraph& h,
                                int max_sequence_length = -1,
                                const SearchLimits& limits = {});

// --- aggregate classification ----------------------------------------------

struct ClassifyOptions {
  SearchLimits limits{};
  /// Also run the general-sequence connectivity oracle and report
  /// disagreement with the restricted search.
  bool cross_check_chain_connectivity = false;
  /// Skip edge-maximality and geometric detection when the number of
  /// candidate k-sets exceeds this cap.
  std::uint64_t subset_enumeration_cap = 1'000'000;
};

struct ClassificationReport {
  int n = 0, k = 0, m = 0;
  bool chain_connected = false;
  bool semicycle_free = false;
  bool hypertree = false;
  std::optional<bool> edge_minimal;   // only for hypertrees
  std::optional<bool> edge_maximal;   // only for hypertrees, within the cap
  int max_chain_length = 0;           // 0 when there are no edges
  std::vector<int> focus_vertices;    // empty when there are no edges
  bool line_graph_connected = false;
  int line_graph_components = 0;
  std::optional<int> geometric_l;     // smallest qualifying l, if any
  std::optional<bool> chain_connected_general;  // only with cross-check
};

ClassificationReport classify(const Hypergraph& h,
                              const ClassifyOptions& opts = {});

}  // namespace hypertree
