#include "hypertree/berge.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hypertree {

namespace {

[[noreturn]] void budget_blown(std::uint64_t cap) {
  throw BudgetExceeded("Berge search exceeded the node-expansion budget of " +
                       std::to_string(cap));
}

}  // namespace

GeneralHypergraph::GeneralHypergraph(int n,
                                     std::vector<std::vector<int>> edges) {
  if (n < 1) throw ParamError("vertex count must be positive");
  n_ = n;
  for (auto& e : edges) {
    if (e.empty()) throw ArityError("empty edge");
    for (int v : e)
      if (v < 0 || v >= n)
        throw RangeError("vertex id " + std::to_string(v) + " outside [0," +
                         std::to_string(n) + ")");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ArityError("edge repeats a vertex");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw DuplicateEdgeError("an edge appears more than once");
  edges_ = std::move(edges);
  incident_.assign(n_, {});
  for (int i = 0; i < edge_count(); ++i)
    for (int v : edges_[i]) incident_[v].push_back(i);
}

GeneralHypergraph GeneralHypergraph::from_uniform(const Hypergraph& h) {
  return GeneralHypergraph(h.vertex_count(), h.edges());
}

std::vector<std::vector<int>> berge_components(const GeneralHypergraph& g) {
  // Berge-path connectivity coincides with ordinary connectivity of the
  // incidence structure: a shortest connecting walk repeats no vertex and
  // no edge, hence is a Berge path.
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges())
    for (std::size_t i = 1; i < e.size(); ++i)
      parent[find(e[i])] = find(e[0]);

  std::vector<std::vector<int>> classes;
  std::vector<int> label(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int root = find(v);
    if (label[root] < 0) {
      label[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[label[root]].push_back(v);
  }
  return classes;
}

std::optional<BergeCycleWitness> find_berge_cycle(const GeneralHypergraph& g,
                                                  int min_length,
                                                  const SearchLimits& limits) {
  if (min_length < 2) throw ParamError("Berge cycles have length at least 2");
  const int n = g.vertex_count();
  std::vector<char> used_v(n, 0);
  std::vector<char> used_e(g.edge_count(), 0);
  std::vector<int> path_v, path_e;
  std::uint64_t expansions = 0;
  std::optional<BergeCycleWitness> found;

  auto dfs = [&](auto&& self, int at, int start) -> bool {
    for (int e : g.incident_edges(at)) {
      if (used_e[e]) continue;
      used_e[e] = 1;
      path_e.push_back(e);
      for (int w : g.edge(e)) {
        if (w == at) continue;
        if (++expansions > limits.max_expansions)
          budget_blown(limits.max_expansions);
        if (w == start &&
            static_cast<int>(path_e.size()) >= min_length) {
          found = BergeCycleWitness{path_v, path_e};
          return false;
        }
        if (used_v[w]) continue;
        used_v[w] = 1;
        path_v.push_back(w);
        bool keep = self(self, w, start);
        path_v.pop_back();
        used_v[w] = 0;
        if (!keep) return false;
      }
      path_e.pop_back();
      used_e[e] = 0;
    }
    return true;
  };

  for (int s = 0; s < n && !found; ++s) {
    used_v[s] = 1;
    path_v.assign(1, s);
    path_e.clear();
    dfs(dfs, s, s);
    used_v[s] = 0;
  }
  return found;
}

BergeForestIdentity berge_forest_identity(const GeneralHypergraph& g,
                                          const SearchLimits& limits) {
  BergeForestIdentity r;
  for (const auto& e : g.edges()) r.lhs += static_cast<long long>(e.size()) - 1;
  r.rhs = g.vertex_count() -
          static_cast<long long>(berge_components(g).size());
  r.cycle_free = !has_berge_cycle(g, limits);
  if ((r.lhs == r.rhs) != r.cycle_free)
    throw InternalInvariantError(
        "sum(|e|-1) == n-p must hold exactly for Berge-cycle-free "
        "hypergraphs");
  return r;
}

LovaszInequality lovasz_inequality(const GeneralHypergraph& g,
                                   const SearchLimits& limits) {
  LovaszInequality r;
  for (const auto& e : g.edges()) r.lhs += static_cast<long long>(e.size()) - 2;
  r.rhs = g.vertex_count() -
          static_cast<long long>(berge_components(g).size());

  bool no_loops = true;
  for (const auto& e : g.edges()) no_loops &= e.size() >= 2;
  bool small_intersections = true;
  for (int i = 0; i < g.edge_count() && small_intersections; ++i)
    for (int j = i + 1; j < g.edge_count() && small_intersections; ++j) {
      std::vector<int> common;
      std::set_intersection(g.edge(i).begin(), g.edge(i).end(),
                            g.edge(j).begin(), g.edge(j).end(),
                            std::back_inserter(common));
      small_intersections = common.size() <= 2;
    }
  r.applicable = no_loops && small_intersections &&
                 !find_berge_cycle(g, 3, limits).has_value();
  if (r.applicable && !(r.lhs < r.rhs))
    throw InternalInvariantError(
        "sum(|e|-2) < n-p must hold when the gate conditions are met");
  return r;
}

}  // namespace hypertree
