#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertree/hypergraph.hpp"
#include "hypertree/recognition.hpp"

namespace hypertree {

/// Constructive certificate behind the edge-count upper bounds: one or more
/// injections from edges to (k-1)-subsets of the vertices, produced by
/// repeatedly deleting the last edge of a maximal chain. `domain` lists the
/// edges in deletion order, `chains` the maximal chain used at each step,
/// and maps[i][step] is the image of domain[step] under the i-th injection.
/// The single-map variant certifies m <= binom(n,k-1); with k-l+1 maps of
/// pairwise disjoint images it certifies m <= binom(n,k-1)/(k-l+1).
struct PhiTable {
  std::vector<std::vector<int>> domain;
  std::vector<std::vector<int>> chains;
  std::vector<std::vector<std::vector<int>>> maps;
};

/// Injectivity of every map and pairwise disjointness of their images,
/// checked directly from the stored sets. Throws InternalInvariantError.
void validate_phi_table(const PhiTable& table);

/// The deletion-loop assignment for a semicycle-free hypergraph with at
/// least one edge: build a maximal chain (greedy, deterministic), map its
/// last edge to the last k-1 chain vertices, delete the edge, repeat.
/// Throws NotSemicycleFreeError / EmptyHypergraphError.
PhiTable phi_assignment(const Hypergraph& h, const SearchLimits& limits = {});

/// The multi-injection variant for hypertrees whose chains have length at
/// most l (1 <= l <= k): each deleted maximal chain has at least k-l+1
/// vertices common to all of its edges; the k-l+1 smallest ones u_1<...<u_i
/// give maps step -> e \ {u_i}. Throws NotLHypertreeError; an intersection
/// smaller than k-l+1 would falsify the certificate argument and aborts
/// with InternalInvariantError.
PhiTable phi_multi(const Hypergraph& h, int l, const SearchLimits& limits = {});

/// The deterministic greedy used by both assignments: start from the
/// canonically smallest edge in ascending order, extend at the right end
/// with the smallest admissible vertex until stuck, then extend at the left
/// end the same way; the orientation is preserved.
std::vector<int> greedy_maximal_chain(const Hypergraph& h);

struct BoundReport {
  std::string bound_name;  // "lower", "upper", "l-hypertree"
  int n = 0, k = 0, m = 0;
  std::uint64_t bound_value = 0;  // compare m (times divisor) against this
  std::uint64_t bound_divisor = 1;
  bool holds = false;
  bool applicable = true;
  bool counterexample = false;    // lower bound outside its applicability
  std::string hypothesis;         // which precondition was certified
  std::optional<PhiTable> witness;
};

/// m >= n-(k-1) for chain-connected hypergraphs; applicable when
/// n >= (k-1)^2 or k <= 5 (below k = 6 no chain-connected hypergraph
/// undercuts the bound). A chain-connected instance that undercuts the
/// bound outside the applicable range is labelled a counterexample.
/// Throws NotChainConnectedError.
BoundReport check_lower_bound(const Hypergraph& h,
                              const SearchLimits& limits = {});

/// m <= binom(n,k-1) for semicycle-free hypergraphs, with the phi table
/// attached; hypergraphs with semicycles still qualify when cycle-free,
/// without a certificate. Throws HypothesisError when neither holds.
BoundReport check_upper_bound(const Hypergraph& h,
                              const SearchLimits& limits = {});

/// m <= binom(n,k-1)/(k-l+1) with the k-l+1 disjoint injections attached.
BoundReport check_l_hypertree_bound(const Hypergraph& h, int l,
                                    const SearchLimits& limits = {});

}  // namespace hypertree
