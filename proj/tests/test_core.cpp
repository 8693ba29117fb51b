#include <doctest.h>

#include <random>

#include "hypertree/combinatorics.hpp"
#include "hypertree/generators.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/line_graph.hpp"
#include "oracles.hpp"

using namespace hypertree;
namespace ht = hypertree::testing;

TEST_CASE("construction canonicalizes edges and edge order") {
  Hypergraph h(3, 5, {{2, 1, 0}, {1, 2, 3}, {2, 3, 4}});
  CHECK(h.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  CHECK(h == tight_path(5, 3));

  Hypergraph scrambled(3, 5, {{4, 3, 2}, {0, 2, 1}, {3, 1, 2}});
  CHECK(scrambled == tight_path(5, 3));
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2}, {2, 1, 0}}), DuplicateEdgeError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 5}}), RangeError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, -1}}), RangeError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 1}}), ArityError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2, 3}}), ArityError);
  CHECK_THROWS_AS(Hypergraph(1, 4, {}), ParamError);
  CHECK_THROWS_AS(Hypergraph(3, 2, {}), ParamError);
}

TEST_CASE("tight line graph matches the k-1 intersection rule") {
  SUBCASE("order-5 hypertree: triangle plus isolated node") {
    Hypergraph h = ht::sample_hypertree_order5();
    TightLineGraph g = tight_line_graph(h);
    CHECK(g.node_count == 4);
    CHECK(g.edge_pair_count() == 3);
    CHECK(g.component_count() == 2);
    // edges in canonical order: {0,1,2},{0,3,4},{1,2,3},{1,2,4}
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(1, 3));
  }
  SUBCASE("star: complete graph on the edges") {
    TightLineGraph g = tight_line_graph(tight_star(7, 3));
    CHECK(g.node_count == 5);
    CHECK(g.edge_pair_count() == 10);
    CHECK(g.component_count() == 1);
  }
  SUBCASE("two disjoint edges: no adjacency") {
    Hypergraph h(3, 6, {{0, 1, 2}, {3, 4, 5}});
    TightLineGraph g = tight_line_graph(h);
    CHECK(g.node_count == 2);
    CHECK(g.edge_pair_count() == 0);
    CHECK(g.component_count() == 2);
  }
}

TEST_CASE("tight line graph: brute-force pair check on random instances") {
  std::mt19937 rng(7101);
  for (int round = 0; round < 60; ++round) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = k + 1 + static_cast<int>(rng() % 5);
    int max_m = std::min<std::uint64_t>(20, binomial(n, k));
    int m = 1 + static_cast<int>(rng() % max_m);
    Hypergraph h = ht::random_hypergraph(rng, n, k, m);
    TightLineGraph g = tight_line_graph(h);
    int expected_pairs = 0;
    for (int i = 0; i < h.edge_count(); ++i) {
      CHECK_FALSE(g.adjacent(i, i));
      for (int j = i + 1; j < h.edge_count(); ++j) {
        int common = 0;
        for (int a : h.edge(i))
          for (int b : h.edge(j)) common += a == b;
        bool want = common == k - 1;
        CHECK(g.adjacent(i, j) == want);
        CHECK(g.adjacent(j, i) == want);
        expected_pairs += want;
      }
    }
    CHECK(g.edge_pair_count() == expected_pairs);
  }
}

TEST_CASE("class decomposition") {
  SUBCASE("order-5 hypertree") {
    ClassDecomposition d = class_decomposition(ht::sample_hypertree_order5());
    CHECK(d.class_count == 2);
    CHECK(d.sigma == 8);
    std::vector<std::vector<int>> classes;
    for (const auto& c : d.classes) classes.push_back(c.to_vector());
    std::sort(classes.begin(), classes.end());
    CHECK(classes == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {0, 3, 4}});
  }
  SUBCASE("star: one class covering everything") {
    ClassDecomposition d = class_decomposition(tight_star(7, 3));
    CHECK(d.class_count == 1);
    CHECK(d.sigma == 7);
    CHECK(d.classes[0].count() == 7);
  }
  SUBCASE("three-edge counterexample: edgeless line graph") {
    ClassDecomposition d = class_decomposition(small_counterexample(6));
    CHECK(d.class_count == 3);
    CHECK(d.sigma == 18);
    for (const auto& c : d.classes) CHECK(c.count() == 6);
    CHECK(d.min_classes_per_vertex == 2);
  }
  SUBCASE("isolated vertex is rejected") {
    Hypergraph h(3, 5, {{0, 1, 2}});
    CHECK_THROWS_AS(class_decomposition(h), IsolatedVertexError);
  }
}

TEST_CASE("sigma equals the per-vertex class count sum") {
  std::mt19937 rng(2218);
  int done = 0;
  while (done < 40) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = k + 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 8);
    Hypergraph h = ht::random_hypergraph(rng, n, k, m);
    if (!h.isolated_vertices().empty()) continue;
    ++done;
    ClassDecomposition d = class_decomposition(h);
    long long by_vertex = 0;
    for (int v = 0; v < n; ++v)
      for (const auto& c : d.classes) by_vertex += c.test(v);
    CHECK(d.sigma == by_vertex);
  }
}

TEST_CASE("class counting inequalities") {
  SUBCASE("three-edge counterexample: both inequalities, window hit") {
    Hypergraph h = small_counterexample(6);
    ClassInequalityDiagnostic diag =
        check_class_inequalities(class_decomposition(h), h);
    CHECK(diag.sigma == 18);
    CHECK(diag.min_classes_per_vertex == 2);
    CHECK(diag.class_count == 3);
    CHECK(diag.sigma_ge_rn);            // 18 >= 2*9, with equality
    CHECK(diag.sigma_ge_cover_sum);     // 18 >= 9+1+1*6 = 16
    CHECK(diag.counterexample_window);  // it undercuts the bound, so it must
    CHECK(h.vertex_count() < (h.uniformity() - 1) * (h.uniformity() - 1));
  }
  SUBCASE("star: the single class covers V, lemma vacuous") {
    Hypergraph h = tight_star(7, 3);
    CHECK_THROWS_WITH_AS(check_class_inequalities(class_decomposition(h), h),
                         doctest::Contains("vacuous"), PreconditionError);
  }
  SUBCASE("cluster counterexample: window test holds") {
    Hypergraph h = cluster_counterexample(6);
    ClassInequalityDiagnostic diag =
        check_class_inequalities(class_decomposition(h), h);
    CHECK(diag.min_classes_per_vertex == 3);
    CHECK(diag.class_count == 6);
    CHECK(diag.counterexample_window);
    CHECK(h.vertex_count() == 12);
    CHECK(h.vertex_count() < 25);
  }
  SUBCASE("disconnected input is rejected") {
    Hypergraph h(3, 6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_THROWS_AS(check_class_inequalities(class_decomposition(h), h),
                    PreconditionError);
  }
}

TEST_CASE("without_edge and with_edge stay canonical") {
  Hypergraph h = tight_path(5, 3);
  Hypergraph less = h.without_edge(1);
  CHECK(less.edge_count() == 2);
  CHECK(less.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
  Hypergraph back = less.with_edge({3, 2, 1});
  CHECK(back == h);
  CHECK_THROWS_AS(h.with_edge({0, 1, 2}), DuplicateEdgeError);
}
