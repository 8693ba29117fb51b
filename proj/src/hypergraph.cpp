#include "hypertree/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace hypertree {

namespace {

std::string edge_to_string(const std::vector<int>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<std::vector<int>> edges) {
  if (k < 2) throw ParamError("uniformity must be at least 2, got " + std::to_string(k));
  if (n < k)
    throw ParamError("vertex count " + std::to_string(n) +
                     " is smaller than the uniformity " + std::to_string(k));
  k_ = k;
  n_ = n;
  for (auto& e : edges) {
    for (int v : e) {
      if (v < 0 || v >= n)
        throw RangeError("vertex id " + std::to_string(v) + " outside [0," +
                         std::to_string(n) + ") in edge " + edge_to_string(e));
    }
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != k ||
        std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ArityError("edge " + edge_to_string(e) + " does not have exactly " +
                       std::to_string(k) + " distinct vertices");
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw DuplicateEdgeError("edge " + edge_to_string(*dup) +
                             " appears more than once");
  edges_ = std::move(edges);
  build_masks();
}

Hypergraph Hypergraph::from_canonical(int k, int n,
                                      std::vector<std::vector<int>> edges) {
  Hypergraph h;
  h.k_ = k;
  h.n_ = n;
  h.edges_ = std::move(edges);
  h.build_masks();
  return h;
}

void Hypergraph::build_masks() {
  edge_masks_.assign(edges_.size(), Bitset(n_));
  incident_.assign(n_, Bitset(static_cast<int>(edges_.size())));
  for (int i = 0; i < edge_count(); ++i) {
    for (int v : edges_[i]) {
      edge_masks_[i].set(v);
      incident_[v].set(i);
    }
  }
}

int Hypergraph::edge_index_of_sorted(const std::vector<int>& key) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Hypergraph::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (incident_[v].none()) out.push_back(v);
  return out;
}

Hypergraph Hypergraph::without_edge(int i) const {
  std::vector<std::vector<int>> rest;
  rest.reserve(edges_.size() - 1);
  for (int j = 0; j < edge_count(); ++j)
    if (j != i) rest.push_back(edges_[j]);
  return from_canonical(k_, n_, std::move(rest));
}

Hypergraph Hypergraph::with_edge(std::vector<int> extra) const {
  std::sort(extra.begin(), extra.end());
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), extra);
  if (pos != edges_.end() && *pos == extra)
    throw DuplicateEdgeError("edge " + edge_to_string(extra) +
                             " is already present");
  std::vector<std::vector<int>> all;
  all.reserve(edges_.size() + 1);
  all.insert(all.end(), edges_.begin(), pos);
  all.push_back(std::move(extra));
  all.insert(all.end(), pos, edges_.end());
  return from_canonical(k_, n_, std::move(all));
}

}  // namespace hypertree
