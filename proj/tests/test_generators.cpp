#include <doctest.h>

#include "hypertree/combinatorics.hpp"
#include "hypertree/generators.hpp"
#include "hypertree/recognition.hpp"
#include "oracles.hpp"

using namespace hypertree;

TEST_CASE("tight_path") {
  CHECK(tight_path(5, 3).edge_count() == 3);
  CHECK(tight_path(3, 3).edge_count() == 1);
  CHECK(tight_path(7, 3).edge_count() == 5);  // n-(k-1)
  CHECK(tight_path(5, 3).edges() ==
        std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  CHECK(is_hypertree(tight_path(6, 3)));
  CHECK_THROWS_AS(tight_path(2, 3), ParamError);
}

TEST_CASE("tight_star") {
  Hypergraph s = tight_star(7, 3);
  CHECK(s.edge_count() == 5);
  for (const auto& e : s.edges()) {
    CHECK(e[0] == 0);
    CHECK(e[1] == 1);
  }
  CHECK(tight_star(3, 3).edge_count() == 1);
  CHECK(is_hypertree(s));
  CHECK(is_edge_minimal(s));
  CHECK_THROWS_AS(tight_star(2, 3), ParamError);
}

TEST_CASE("l_flower") {
  CHECK(flower(6, 3).edge_count() == 5);
  CHECK(l_flower(7, 3, 2) == tight_star(7, 3));
  CHECK(l_flower(9, 4, 3) == tight_star(9, 4));

  SUBCASE("below the edge-minimal window: hypertree but not minimal") {
    Hypergraph f5 = flower(5, 3);
    CHECK(is_hypertree(f5));
    CHECK_FALSE(is_edge_minimal(f5));
  }
  SUBCASE("parameter gates") {
    CHECK_THROWS_AS(l_flower(3, 3, 1), ParamError);
    CHECK_THROWS_AS(l_flower(6, 3, 3), ParamError);
    CHECK_THROWS_AS(l_flower(6, 3, 0), ParamError);
  }
}

TEST_CASE("flower hypertree and edge-minimality windows") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = k + 1; n <= 4 * (k - 1) + 2; ++n) {
      Hypergraph f = l_flower(n, k, 1);
      bool tree = is_hypertree(f);
      bool expect_tree = 2 * k - 1 <= n && n <= 4 * (k - 1);
      CHECK_MESSAGE(tree == expect_tree, "flower(", n, ",", k, ") hypertree");
      bool minimal = tree && is_edge_minimal(f);
      bool expect_minimal = 3 * (k - 1) <= n && n <= 4 * (k - 1);
      CHECK_MESSAGE(minimal == expect_minimal, "flower(", n, ",", k,
                    ") edge-minimal");
    }
  }
}

TEST_CASE("fano_plane") {
  Hypergraph f = fano_plane();
  CHECK(f.edge_count() == 7);
  CHECK(f.vertex_count() == 7);
  CHECK(is_l_geometric(f, 2));
  CHECK(f.edge_count() * binomial(3, 2) == binomial(7, 2));
  CHECK(is_hypertree(f));
  CHECK(is_edge_minimal(f));
}

TEST_CASE("small_counterexample") {
  SUBCASE("k=6") {
    Hypergraph h = small_counterexample(6);
    CHECK(h.vertex_count() == 9);
    CHECK(h.edge_count() == 3);
    CHECK(h.edge_count() < h.vertex_count() - (h.uniformity() - 1));
    CHECK(is_hypertree(h));
    CHECK(is_edge_minimal(h));
  }
  SUBCASE("k=7") {
    Hypergraph h = small_counterexample(7);
    CHECK(h.vertex_count() == 10);
    CHECK(h.edge_count() == 3);
    CHECK(h.edge_count() < 4);
    CHECK(is_chain_connected(h));
  }
  SUBCASE("below k=6 no such construction exists") {
    CHECK_THROWS_AS(small_counterexample(5), ParamError);
  }
}

TEST_CASE("cluster_counterexample") {
  SUBCASE("k=6") {
    Hypergraph h = cluster_counterexample(6);
    CHECK(h.vertex_count() == 12);
    CHECK(h.edge_count() == 6);
    CHECK(h.edge_count() < h.vertex_count() - 5);
    CHECK(is_chain_connected(h));
  }
  SUBCASE("k=8") {
    Hypergraph h = cluster_counterexample(8);
    CHECK(h.vertex_count() == 24);
    CHECK(h.edge_count() == 15);
    CHECK(h.edge_count() < 17);
    CHECK(is_chain_connected(h));
  }
  SUBCASE("parity and size gates") {
    CHECK_THROWS_AS(cluster_counterexample(7), ParamError);
    CHECK_THROWS_AS(cluster_counterexample(4), ParamError);
  }
}

TEST_CASE("odd_cluster_counterexample") {
  SUBCASE("k=7") {
    Hypergraph h = odd_cluster_counterexample(7);
    CHECK(h.vertex_count() >= 10);
    CHECK(h.edge_count() <
          h.vertex_count() - 6);
    CHECK(is_chain_connected(h));
  }
  SUBCASE("k=9") {
    Hypergraph h = odd_cluster_counterexample(9);
    CHECK(h.vertex_count() >= 21);
    CHECK(h.edge_count() < h.vertex_count() - 8);
    CHECK(is_chain_connected(h));
  }
  SUBCASE("parity gate") {
    CHECK_THROWS_AS(odd_cluster_counterexample(6), ParamError);
    CHECK_THROWS_AS(odd_cluster_counterexample(5), ParamError);
  }
}

TEST_CASE("non_hypertree_cc") {
  Hypergraph h = non_hypertree_cc(5);
  CHECK(h.vertex_count() == 15);
  CHECK(h.edge_count() == 15);
  CHECK(is_chain_connected(h));
  CHECK(find_semicycle(h));
  CHECK(find_tight_cycle(h));
  CHECK_FALSE(is_hypertree(h));
  CHECK_THROWS_AS(non_hypertree_cc(4), ParamError);
}

TEST_CASE("b_construction") {
  SUBCASE("single edge base: 11 vertices, 29 edges, still a hypertree") {
    Hypergraph base(3, 3, {{0, 1, 2}});
    Hypergraph big = b_construction(base);
    CHECK(big.vertex_count() == 11);
    CHECK(big.edge_count() == 29);
    CHECK(is_chain_connected(big));
    CHECK_FALSE(find_semicycle(big));
  }
  SUBCASE("every string pair lies in exactly one added edge") {
    Hypergraph base(3, 3, {{0, 1, 2}});
    Hypergraph big = b_construction(base);
    for (int u = 3; u < 11; ++u)
      for (int w = u + 1; w < 11; ++w) {
        int count = 0;
        for (const auto& e : big.edges())
          count += std::find(e.begin(), e.end(), u) != e.end() &&
                   std::find(e.begin(), e.end(), w) != e.end();
        CHECK(count == 1);
      }
  }
  SUBCASE("hypertree base keeps the property") {
    Hypergraph big = b_construction(tight_path(4, 3));
    CHECK(big.vertex_count() == 20);
    CHECK(big.edge_count() == 2 + 120);
    CHECK(is_hypertree(big));
  }
  SUBCASE("gates") {
    CHECK_THROWS_AS(b_construction(tight_path(5, 4)), ParamError);
    CHECK_THROWS_AS(b_construction(tight_path(15, 3)), SizeError);
  }
}

TEST_CASE("recursive_extend") {
  SUBCASE("stars arise by repeatedly attaching a leaf through the centres") {
    Hypergraph h(3, 3, {{0, 1, 2}});
    for (int n = 3; n < 7; ++n) {
      h = recursive_extend(h, {{0, 1, n}});
      CHECK(h == tight_star(n + 1, 3));
    }
  }
  SUBCASE("new edges must contain the fresh vertex") {
    Hypergraph h(3, 3, {{0, 1, 2}});
    CHECK_THROWS_AS(recursive_extend(h, {{0, 1, 2}}), FreshVertexMissing);
  }
  SUBCASE("extensions that break edge-minimality are rejected") {
    Hypergraph h(3, 3, {{0, 1, 2}});
    CHECK_THROWS_AS(recursive_extend(h, {{0, 1, 3}, {0, 2, 3}}),
                    NotEdgeMinimalAfterExtension);
  }
  SUBCASE("the base must be an edge-minimal hypertree") {
    CHECK_THROWS_AS(recursive_extend(flower(5, 3), {{0, 1, 5}}),
                    PreconditionError);
  }
  SUBCASE("the 7-vertex flower cannot arise: every vertex removal disconnects") {
    Hypergraph f = flower(7, 3);
    CHECK(is_hypertree(f));
    CHECK(is_edge_minimal(f));
    for (int victim = 0; victim < 7; ++victim) {
      std::vector<std::vector<int>> kept;
      for (const auto& e : f.edges()) {
        if (std::find(e.begin(), e.end(), victim) != e.end()) continue;
        std::vector<int> relabeled;
        for (int v : e) relabeled.push_back(v < victim ? v : v - 1);
        kept.push_back(relabeled);
      }
      Hypergraph reduced(3, 6, kept);
      CHECK_FALSE(is_chain_connected(reduced));
    }
  }
}
