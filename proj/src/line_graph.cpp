#include "hypertree/line_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "hypertree/recognition.hpp"

namespace hypertree {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TightLineGraph tight_line_graph(const Hypergraph& h) {
  const int m = h.edge_count();
  TightLineGraph g;
  g.node_count = m;
  g.adjacency.assign(m, Bitset(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (Bitset::intersection_count(h.edge_mask(i), h.edge_mask(j)) ==
          h.uniformity() - 1) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
    }
  }
  return g;
}

int TightLineGraph::edge_pair_count() const {
  int twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

std::vector<int> TightLineGraph::component_labels() const {
  UnionFind uf(node_count);
  for (int i = 0; i < node_count; ++i)
    adjacency[i].for_each([&](int j) { uf.unite(i, j); });
  std::vector<int> labels(node_count, -1);
  int next = 0;
  for (int i = 0; i < node_count; ++i) {
    int root = uf.find(i);
    if (labels[root] < 0) labels[root] = next++;
    labels[i] = labels[root];
  }
  return labels;
}

int TightLineGraph::component_count() const {
  int c = 0;
  for (int label : component_labels()) c = std::max(c, label + 1);
  return c;
}

ClassDecomposition class_decomposition(const Hypergraph& h) {
  auto isolated = h.isolated_vertices();
  if (!isolated.empty())
    throw IsolatedVertexError("vertex " + std::to_string(isolated.front()) +
                              " lies in no edge");
  TightLineGraph g = tight_line_graph(h);
  std::vector<int> labels = g.component_labels();
  int count = 0;
  for (int label : labels) count = std::max(count, label + 1);

  ClassDecomposition d;
  d.components.assign(count, {});
  d.classes.assign(count, Bitset(h.vertex_count()));
  for (int i = 0; i < g.node_count; ++i) {
    d.components[labels[i]].push_back(i);
    d.classes[labels[i]] |= h.edge_mask(i);
  }
  d.class_count = count;
  for (const auto& cls : d.classes) d.sigma += cls.count();

  int r = count;
  for (int v = 0; v < h.vertex_count(); ++v) {
    int in = 0;
    for (const auto& cls : d.classes)
      if (cls.test(v)) ++in;
    r = std::min(r, in);
  }
  d.min_classes_per_vertex = r;
  return d;
}

ClassInequalityDiagnostic check_class_inequalities(const ClassDecomposition& d,
                                                   const Hypergraph& h) {
  if (!h.isolated_vertices().empty())
    throw PreconditionError("hypergraph has an isolated vertex");
  if (!is_chain_connected(h))
    throw PreconditionError("hypergraph is not chain-connected");
  const int n = h.vertex_count();
  for (const auto& cls : d.classes)
    if (cls.count() == n)
      throw PreconditionError(
          "lemma vacuous: a class covers every vertex, so the edge count "
          "bound follows directly from that component");

  ClassInequalityDiagnostic out;
  out.n = n;
  out.k = h.uniformity();
  out.sigma = d.sigma;
  out.class_count = d.class_count;
  out.min_classes_per_vertex = d.min_classes_per_vertex;

  const long long r = d.min_classes_per_vertex;
  const long long l = d.class_count;
  const long long k = h.uniformity();
  out.sigma_ge_rn = d.sigma >= r * n;
  out.sigma_ge_cover_sum = d.sigma >= n + r - 1 + (l - r) * k;
  // (r-1)n/(k-1) < l-1  and  l-1 < (r-1)(k-1), in exact integer arithmetic
  out.counterexample_window =
      (r - 1) * n < (l - 1) * (k - 1) && l - 1 < (r - 1) * (k - 1);
  return out;
}

}  // namespace hypertree
