#include "hypertree/bounds.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hypertree/combinatorics.hpp"

namespace hypertree {

namespace {

// Smallest fresh vertex whose window with the last k-1 entries of `run` is
// an edge, or -1. `left` mirrors the test at the front.
int smallest_extension(const Hypergraph& h, const std::vector<int>& run,
                       bool left) {
  const int k = h.uniformity();
  const int len = static_cast<int>(run.size());
  Bitset cover(h.edge_count());
  bool first = true;
  for (int i = 0; i < k - 1; ++i) {
    int v = left ? run[i] : run[len - 1 - i];
    if (first) {
      cover = h.incident_edges(v);
      first = false;
    } else {
      cover &= h.incident_edges(v);
    }
  }
  int best = -1;
  cover.for_each([&](int e) {
    for (int w : h.edge(e)) {
      if (std::find(run.begin(), run.end(), w) == run.end()) {
        if (best < 0 || w < best) best = w;
        return;
      }
    }
  });
  return best;
}

Hypergraph erase_edge(const Hypergraph& h, const std::vector<int>& edge) {
  int idx = h.edge_index_of_sorted(edge);
  if (idx < 0) throw InternalInvariantError("deleted edge vanished");
  return h.without_edge(idx);
}

}  // namespace

std::vector<int> greedy_maximal_chain(const Hypergraph& h) {
  std::vector<int> run = h.edge(0);
  while (true) {
    int y = smallest_extension(h, run, false);
    if (y < 0) break;
    run.push_back(y);
  }
  while (true) {
    int y = smallest_extension(h, run, true);
    if (y < 0) break;
    run.insert(run.begin(), y);
  }
  return run;
}

void validate_phi_table(const PhiTable& table) {
  for (const auto& map : table.maps) {
    if (map.size() != table.domain.size())
      throw InternalInvariantError("phi map does not cover the whole domain");
    std::set<std::vector<int>> image(map.begin(), map.end());
    if (image.size() != map.size())
      throw InternalInvariantError("phi map is not injective");
  }
  std::set<std::vector<int>> all;
  std::size_t total = 0;
  for (const auto& map : table.maps) {
    all.insert(map.begin(), map.end());
    total += map.size();
  }
  if (all.size() != total)
    throw InternalInvariantError("phi images are not pairwise disjoint");
}

PhiTable phi_assignment(const Hypergraph& h, const SearchLimits& limits) {
  if (h.edge_count() == 0)
    throw EmptyHypergraphError("phi assignment needs at least one edge");
  if (find_semicycle(h, limits))
    throw NotSemicycleFreeError(
        "the maximal-chain argument needs a semicycle-free hypergraph");

  const int k = h.uniformity();
  PhiTable table;
  table.maps.resize(1);
  Hypergraph cur = h;
  while (cur.edge_count() > 0) {
    std::vector<int> chain = greedy_maximal_chain(cur);
    std::vector<int> last_edge(chain.end() - k, chain.end());
    std::sort(last_edge.begin(), last_edge.end());
    std::vector<int> image(chain.end() - (k - 1), chain.end());
    std::sort(image.begin(), image.end());
    table.chains.push_back(chain);
    table.domain.push_back(last_edge);
    table.maps[0].push_back(std::move(image));
    cur = erase_edge(cur, last_edge);
  }
  validate_phi_table(table);
  return table;
}

PhiTable phi_multi(const Hypergraph& h, int l, const SearchLimits& limits) {
  const int k = h.uniformity();
  if (l < 1 || l > k) throw ParamError("phi_multi requires 1 <= l <= k");
  if (h.edge_count() == 0)
    throw EmptyHypergraphError("phi assignment needs at least one edge");
  if (!is_hypertree(h, limits) || max_chain_length(h, limits) > l)
    throw NotLHypertreeError(
        "the multi-injection certificate needs a hypertree whose chains "
        "have length at most " +
        std::to_string(l));

  const int fan = k - l + 1;
  PhiTable table;
  table.maps.resize(fan);
  Hypergraph cur = h;
  while (cur.edge_count() > 0) {
    std::vector<int> chain = greedy_maximal_chain(cur);
    std::vector<int> last_edge(chain.end() - k, chain.end());
    std::sort(last_edge.begin(), last_edge.end());

    // vertices common to every window of the chain
    Bitset common(cur.vertex_count());
    for (int v : last_edge) common.set(v);
    const int windows = static_cast<int>(chain.size()) - k + 1;
    for (int i = 0; i < windows; ++i) {
      Bitset w(cur.vertex_count());
      for (int t = 0; t < k; ++t) w.set(chain[i + t]);
      common &= w;
    }
    std::vector<int> shared = common.to_vector();
    if (static_cast<int>(shared.size()) < fan)
      throw InternalInvariantError(
          "a maximal chain of length <= l must leave k-l+1 vertices in the "
          "intersection of its edges; found only " +
          std::to_string(shared.size()));

    table.chains.push_back(chain);
    table.domain.push_back(last_edge);
    for (int i = 0; i < fan; ++i) {
      std::vector<int> image;
      for (int v : last_edge)
        if (v != shared[i]) image.push_back(v);
      table.maps[i].push_back(std::move(image));
    }
    cur = erase_edge(cur, last_edge);
  }
  validate_phi_table(table);
  return table;
}

BoundReport check_lower_bound(const Hypergraph& h, const SearchLimits& limits) {
  if (!is_chain_connected(h, limits))
    throw NotChainConnectedError("the lower bound applies to chain-connected "
                                 "hypergraphs");
  BoundReport r;
  r.bound_name = "lower";
  r.n = h.vertex_count();
  r.k = h.uniformity();
  r.m = h.edge_count();
  r.bound_value = static_cast<std::uint64_t>(r.n - (r.k - 1));
  r.hypothesis = "chain-connected";
  r.applicable = r.n >= (r.k - 1) * (r.k - 1) || r.k <= 5;
  r.holds = static_cast<std::uint64_t>(r.m) >= r.bound_value;
  r.counterexample = !r.applicable && !r.holds;
  return r;
}

BoundReport check_upper_bound(const Hypergraph& h, const SearchLimits& limits) {
  BoundReport r;
  r.bound_name = "upper";
  r.n = h.vertex_count();
  r.k = h.uniformity();
  r.m = h.edge_count();
  r.bound_value = binomial(r.n, r.k - 1);
  if (!find_semicycle(h, limits)) {
    r.hypothesis = "semicycle-free";
    if (r.m > 0) r.witness = phi_assignment(h, limits);
  } else if (!find_tight_cycle(h, limits)) {
    r.hypothesis = "cycle-free";
  } else {
    throw HypothesisError(
        "the upper bound needs a semicycle-free or at least cycle-free "
        "hypergraph");
  }
  r.holds = static_cast<std::uint64_t>(r.m) <= r.bound_value;
  return r;
}

BoundReport check_l_hypertree_bound(const Hypergraph& h, int l,
                                    const SearchLimits& limits) {
  BoundReport r;
  r.bound_name = "l-hypertree";
  r.n = h.vertex_count();
  r.k = h.uniformity();
  r.m = h.edge_count();
  r.bound_value = binomial(r.n, r.k - 1);
  r.bound_divisor = static_cast<std::uint64_t>(r.k - l + 1);
  r.hypothesis = std::to_string(l) + "-hypertree";
  r.witness = phi_multi(h, l, limits);
  r.holds =
      static_cast<std::uint64_t>(r.m) * r.bound_divisor <= r.bound_value;
  return r;
}

}  // namespace hypertree
