#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <vector>

#include "hypertree/hypergraph.hpp"
#include "hypertree/recognition.hpp"

namespace hypertree {

struct EnumerationOptions {
  /// Only classify edge sets whose union covers every vertex.
  bool cover_all_vertices = false;
  int workers = 1;
  /// When set, one JSON file per work unit is written here and completed
  /// units are loaded instead of recomputed.
  std::optional<std::filesystem::path> checkpoint_dir;
  /// Permutation-canonical isomorphism class counts (n <= 8 only).
  bool isomorphism_reduce = false;
  /// Run the general-sequence semicycle oracle on every stride-th edge set
  /// (by subset index); 0 disables the cross-check.
  std::uint64_t oracle_sample_stride = 0;
  /// Guard: refuse universes larger than 2^max_universe_bits edge sets.
  int max_universe_bits = 25;
  SearchLimits limits{};
};

struct InstanceWitness {
  std::uint64_t index = 0;  // subset index within the fixed universe order
  std::vector<std::vector<int>> edges;
  bool operator==(const InstanceWitness&) const = default;
};

/// Aggregated results of one exhaustive sweep. Merging is associative and
/// commutative with deterministic tie-breaks, so the totals are independent
/// of the partitioning into work units.
struct EnumerationStats {
  int n = 0, k = 0;
  int universe_size = 0;
  std::uint64_t total_edge_sets = 0;
  std::uint64_t skipped_non_covering = 0;

  std::uint64_t chain_connected = 0;
  std::uint64_t semicycle_free = 0;
  std::uint64_t hypertree = 0;
  std::uint64_t edge_minimal = 0;
  std::uint64_t edge_maximal = 0;

  std::optional<InstanceWitness> min_hypertree;
  std::optional<InstanceWitness> max_hypertree;
  std::optional<InstanceWitness> max_edge_minimal;
  std::optional<InstanceWitness> min_edge_maximal;

  std::uint64_t lower_bound_violations = 0;
  std::uint64_t upper_bound_violations = 0;
  std::uint64_t cycle_implication_violations = 0;
  std::uint64_t oracle_agreement_checked = 0;
  std::uint64_t oracle_agreement_violations = 0;
  std::uint64_t class_coverage_violations = 0;

  std::optional<std::set<std::uint64_t>> hypertree_iso_classes;
  std::optional<std::set<std::uint64_t>> edge_minimal_iso_classes;
  std::optional<std::set<std::uint64_t>> edge_maximal_iso_classes;

  bool operator==(const EnumerationStats&) const = default;
};

/// Merge b into a (witness ties resolved towards the smaller subset index).
void merge_stats(EnumerationStats& a, const EnumerationStats& b);

/// Classify every subset of the k-subset universe over n vertices and
/// verify, per instance, the lower and upper edge bounds, that a tight
/// cycle implies a semicycle, the class pair-coverage property, and (on the
/// sampled instances) agreement with the sequence-space semicycle oracle.
/// Throws SizeError when the universe exceeds the configured guard.
EnumerationStats enumerate_all(int n, int k,
                               const EnumerationOptions& opts = {});

/// Desk-scale measurements around the two extremal open questions: the
/// largest edge-minimal and the smallest edge-maximal hypertree. The
/// reference values binom(n,2)/(k-1) and binom(n,2)/2 are conjectural;
/// probes report and flag, they never fail.
struct ConjectureProbe {
  int n = 0, k = 0;
  std::uint64_t pair_count = 0;  // binom(n,2)
  std::uint64_t edge_minimal_count = 0;
  std::uint64_t edge_maximal_count = 0;
  std::optional<int> max_edge_minimal_edges;
  std::optional<int> min_edge_maximal_edges;
  bool edge_minimal_bound_violated = false;  // max*(k-1) > binom(n,2)
  bool edge_maximal_below_reference = false; // min*2 < binom(n,2)
  bool degenerate = false;                   // a class is empty
};

ConjectureProbe conjecture_probe(int n, int k,
                                 const EnumerationOptions& opts = {});

}  // namespace hypertree
