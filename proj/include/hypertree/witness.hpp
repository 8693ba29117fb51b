#pragma once

#include <string>
#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

/// Vertex sequence v_1..v_l, l >= k, v_1 != v_l, in which every window of
/// k consecutive vertices is an edge of the host and the windows are
/// pairwise distinct. Length (in edges) = l-k+1. Witnesses produced by this
/// library never repeat a vertex.
struct ChainWitness {
  std::vector<int> sequence;
  int length(int k) const { return static_cast<int>(sequence.size()) - k + 1; }
};

/// Like a chain but v_1 = v_l and v_1..v_{l-1} pairwise distinct;
/// at least 3 window-edges.
struct SemicycleWitness {
  std::vector<int> sequence;
  int length(int k) const { return static_cast<int>(sequence.size()) - k + 1; }
};

/// Cyclic vertex sequence v_1..v_l (indices mod l, vertices may repeat)
/// whose l cyclic windows are pairwise distinct edges; l >= k+1.
struct CycleWitness {
  std::vector<int> sequence;
  int length() const { return static_cast<int>(sequence.size()); }
};

// Definition-level validators, written directly from the window conditions
// and kept independent of the search code. On success `why` is untouched.
bool validate_chain_witness(const Hypergraph& h, const ChainWitness& w,
                            std::string* why = nullptr);
bool validate_semicycle_witness(const Hypergraph& h, const SemicycleWitness& w,
                                std::string* why = nullptr);
bool validate_cycle_witness(const Hypergraph& h, const CycleWitness& w,
                            std::string* why = nullptr);

}  // namespace hypertree
