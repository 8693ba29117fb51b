#include "hypertree/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hypertree/combinatorics.hpp"
#include "hypertree/recognition.hpp"

namespace hypertree {

namespace {

void expect_edge_count(const Hypergraph& h, std::uint64_t expected,
                       const char* family) {
  if (static_cast<std::uint64_t>(h.edge_count()) != expected)
    throw InternalInvariantError(std::string(family) +
                                 ": edge count does not match the formula");
}

}  // namespace

Hypergraph tight_path(int n, int k) {
  if (k < 2 || n < k) throw ParamError("tight_path requires n >= k >= 2");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + k <= n; ++i) {
    std::vector<int> e(k);
    std::iota(e.begin(), e.end(), i);
    edges.push_back(std::move(e));
  }
  Hypergraph h(k, n, std::move(edges));
  expect_edge_count(h, n - (k - 1), "tight_path");
  return h;
}

Hypergraph tight_star(int n, int k) {
  if (k < 2 || n < k) throw ParamError("tight_star requires n >= k >= 2");
  std::vector<std::vector<int>> edges;
  for (int w = k - 1; w < n; ++w) {
    std::vector<int> e(k - 1);
    std::iota(e.begin(), e.end(), 0);
    e.push_back(w);
    edges.push_back(std::move(e));
  }
  Hypergraph h(k, n, std::move(edges));
  expect_edge_count(h, n - (k - 1), "tight_star");
  return h;
}

Hypergraph l_flower(int n, int k, int l) {
  if (!(n > k && k > l && l >= 1))
    throw ParamError("l_flower requires n > k > l >= 1");
  const int rim = n - l;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < rim; ++i) {
    std::vector<int> e;
    for (int c = 0; c < l; ++c) e.push_back(c);
    for (int t = 0; t < k - l; ++t) e.push_back(l + (i + t) % rim);
    edges.push_back(std::move(e));
  }
  Hypergraph h(k, n, std::move(edges));
  expect_edge_count(h, n - l, "l_flower");
  if (l == k - 1 && !(h == tight_star(n, k)))
    throw InternalInvariantError("a (k-1)-flower must equal the tight star");
  return h;
}

Hypergraph fano_plane() {
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < 7; ++i)
    lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
  Hypergraph h(3, 7, std::move(lines));
  expect_edge_count(h, 7, "fano_plane");
  return h;
}

Hypergraph small_counterexample(int k) {
  if (k < 6)
    throw ParamError(
        "the three-edge construction needs k >= 6; for k <= 5 every "
        "chain-connected hypergraph has at least n-(k-1) edges");
  std::vector<int> x = {0, 1, 2}, y = {3, 4, 5}, z = {6, 7, 8};
  std::vector<int> core(k - 6);
  std::iota(core.begin(), core.end(), 9);
  auto join = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> e = a;
    e.insert(e.end(), core.begin(), core.end());
    e.insert(e.end(), b.begin(), b.end());
    return e;
  };
  Hypergraph h(k, k + 3, {join(x, y), join(x, z), join(y, z)});
  expect_edge_count(h, 3, "small_counterexample");
  return h;
}

Hypergraph cluster_counterexample(int k) {
  if (k < 6 || k % 2 != 0)
    throw ParamError("cluster_counterexample requires even k >= 6");
  const int c = k - 2;
  const int half = k / 2;
  const int n = c * half;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      std::vector<int> e;
      for (int t = 0; t < half; ++t) e.push_back(i * half + t);
      for (int t = 0; t < half; ++t) e.push_back(j * half + t);
      edges.push_back(std::move(e));
    }
  Hypergraph h(k, n, std::move(edges));
  expect_edge_count(h, binomial(c, 2), "cluster_counterexample");
  if (!(binomial(c, 2) < static_cast<std::uint64_t>(n - (k - 1))))
    throw InternalInvariantError(
        "cluster_counterexample must undercut the n-(k-1) bound");
  return h;
}

Hypergraph odd_cluster_counterexample(int k) {
  if (k < 7 || k % 2 != 1)
    throw ParamError("odd_cluster_counterexample requires odd k >= 7");
  const int half = (k - 1) / 2;
  // pick the largest c with binom(c,2) < c*half + 1 - (k-1); the feasible
  // region is an interval in c, so scan until the constraint fails
  auto feasible = [&](int c) {
    long long n = static_cast<long long>(c) * half + 1;
    return static_cast<long long>(binomial(c, 2)) < n - (k - 1);
  };
  int best = -1;
  for (int c = 2; c <= 2 * k + 2; ++c) {
    if (feasible(c))
      best = c;
    else if (best >= 0)
      break;
  }
  if (best < 0)
    throw ConstraintInfeasible(
        "no cluster count satisfies the counterexample inequality");
  const int c = best;
  const int n = c * half + 1;
  const int extra = n - 1;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      std::vector<int> e;
      for (int t = 0; t < half; ++t) e.push_back(i * half + t);
      for (int t = 0; t < half; ++t) e.push_back(j * half + t);
      e.push_back(extra);
      edges.push_back(std::move(e));
    }
  Hypergraph h(k, n, std::move(edges));
  expect_edge_count(h, binomial(c, 2), "odd_cluster_counterexample");
  if (n < (k - 1) * (k - 4) / 2 + 1)
    throw InternalInvariantError(
        "odd_cluster_counterexample is smaller than its guaranteed order");
  return h;
}

Hypergraph non_hypertree_cc(int n) {
  if (n < 5) throw ParamError("non_hypertree_cc requires n >= 5");
  auto x = [&](int i) { return (i % n + n) % n; };
  auto y = [&](int i) { return n + (i % n + n) % n; };
  auto z = [&](int i) { return 2 * n + (i % n + n) % n; };
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({x(i), x(i + 1), x(i + 2)});
  for (int i = 0; i < n; ++i) edges.push_back({x(i - 1), x(i), y(i)});
  for (int i = 0; i < n; ++i) edges.push_back({z(i), x(i), x(i + 1)});
  Hypergraph h(3, 3 * n, std::move(edges));
  expect_edge_count(h, 3 * static_cast<std::uint64_t>(n), "non_hypertree_cc");
  return h;
}

Hypergraph b_construction(const Hypergraph& base) {
  if (base.uniformity() != 3)
    throw ParamError("the doubling construction is defined for 3-uniform "
                     "hypergraphs only");
  const int nb = base.vertex_count();
  if (nb > 14)
    throw SizeError("doubling a base with " + std::to_string(nb) +
                    " vertices would add 2^" + std::to_string(nb) +
                    " vertices; 14 is the cap");
  const std::uint32_t strings = std::uint32_t{1} << nb;
  std::vector<std::vector<int>> edges = base.edges();
  edges.reserve(edges.size() + binomial(strings, 2));
  for (std::uint32_t a = 0; a < strings; ++a)
    for (std::uint32_t b = a + 1; b < strings; ++b) {
      // bit 1 is the most significant of the length-nb string, so the first
      // differing position is counted from the top
      const int high = std::bit_width(a ^ b) - 1;
      const int v = nb - 1 - high;
      edges.push_back({v, static_cast<int>(nb + a), static_cast<int>(nb + b)});
    }
  Hypergraph h(3, nb + static_cast<int>(strings), std::move(edges));
  expect_edge_count(
      h, static_cast<std::uint64_t>(base.edge_count()) + binomial(strings, 2),
      "b_construction");
  return h;
}

Hypergraph recursive_extend(const Hypergraph& h,
                            std::vector<std::vector<int>> new_edges) {
  if (!is_hypertree(h) || !is_edge_minimal(h))
    throw PreconditionError(
        "recursive extension starts from an edge-minimal hypertree");
  const int fresh = h.vertex_count();
  for (const auto& e : new_edges)
    if (std::find(e.begin(), e.end(), fresh) == e.end())
      throw FreshVertexMissing("every new edge must contain vertex " +
                               std::to_string(fresh));
  std::vector<std::vector<int>> all = h.edges();
  all.insert(all.end(), new_edges.begin(), new_edges.end());
  Hypergraph extended(h.uniformity(), fresh + 1, std::move(all));
  if (!is_hypertree(extended) || !is_edge_minimal(extended))
    throw NotEdgeMinimalAfterExtension(
        "the extension is not an edge-minimal hypertree");
  return extended;
}

}  // namespace hypertree
