#include <doctest.h>

#include <random>

#include "hypertree/generators.hpp"
#include "hypertree/recognition.hpp"
#include "hypertree/witness.hpp"
#include "oracles.hpp"

using namespace hypertree;
namespace ht = hypertree::testing;

TEST_CASE("find_chain") {
  SUBCASE("path endpoints give the full path, deterministically") {
    auto w = find_chain(tight_path(5, 3), 0, 4);
    REQUIRE(w);
    CHECK(w->sequence == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(w->length(3) == 3);
  }
  SUBCASE("a single edge is a chain of length one") {
    Hypergraph h(3, 3, {{0, 1, 2}});
    auto w = find_chain(h, 0, 2);
    REQUIRE(w);
    CHECK(w->length(3) == 1);
    std::string why;
    CHECK(validate_chain_witness(h, *w, &why));
  }
  SUBCASE("far-apart rim vertices of a flower are not connected") {
    // rim ids start at 1; cyclic rim distance 4 is not below 2k-2 = 4
    auto w = find_chain(flower(10, 3), 1, 5);
    CHECK_FALSE(w);
  }
  SUBCASE("bad vertex ids") {
    CHECK_THROWS_AS(find_chain(tight_path(5, 3), 0, 5), RangeError);
    CHECK_THROWS_AS(find_chain(tight_path(5, 3), -1, 2), RangeError);
    CHECK_THROWS_AS(find_chain(tight_path(5, 3), 2, 2), PreconditionError);
  }
}

TEST_CASE("is_chain_connected") {
  CHECK(is_chain_connected(tight_star(7, 3)));
  CHECK(is_chain_connected(small_counterexample(6)));
  CHECK_FALSE(is_chain_connected(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK_FALSE(is_chain_connected(Hypergraph(3, 4, {{0, 1, 2}})));  // 3 isolated
  CHECK_FALSE(is_chain_connected(Hypergraph(3, 3, {})));

  SUBCASE("witness table agrees with the plain check") {
    Hypergraph h = ht::sample_hypertree_order5();
    PairChainTable table = chain_connectivity_table(h);
    CHECK(table.connected == is_chain_connected(h));
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) {
        REQUIRE(table.at(u, v));
        const auto& seq = table.at(u, v)->sequence;
        CHECK(std::find(seq.begin(), seq.end(), u) != seq.end());
        CHECK(std::find(seq.begin(), seq.end(), v) != seq.end());
        std::string why;
        CHECK(validate_chain_witness(h, *table.at(u, v), &why));
      }
  }
}

TEST_CASE("find_semicycle") {
  SUBCASE("the minimal three-edge semicycle") {
    Hypergraph h(3, 4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 0}});
    auto w = find_semicycle(h);
    REQUIRE(w);
    CHECK(w->sequence == std::vector<int>{0, 1, 2, 3, 0});
    CHECK(w->length(3) == 3);
    std::string why;
    CHECK(validate_semicycle_witness(h, *w, &why));
  }
  SUBCASE("the order-5 hypertree is semicycle-free") {
    CHECK_FALSE(find_semicycle(ht::sample_hypertree_order5()));
  }
  SUBCASE("doubling a single edge stays semicycle-free") {
    Hypergraph base(3, 3, {{0, 1, 2}});
    CHECK_FALSE(find_semicycle(b_construction(base)));
  }
  SUBCASE("two edges can never form a semicycle") {
    CHECK_FALSE(find_semicycle(Hypergraph(3, 4, {{0, 1, 2}, {1, 2, 3}})));
  }
}

TEST_CASE("find_tight_cycle") {
  SUBCASE("complete 3-uniform on 4 vertices") {
    Hypergraph h(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto w = find_tight_cycle(h);
    REQUIRE(w);
    CHECK(w->length() == 4);
    std::string why;
    CHECK(validate_cycle_witness(h, *w, &why));
  }
  SUBCASE("the order-5 hypertree has no cycle") {
    CHECK_FALSE(find_tight_cycle(ht::sample_hypertree_order5()));
  }
  SUBCASE("the chain-connected non-hypertree contains its defining cycle") {
    auto w = find_tight_cycle(non_hypertree_cc(5));
    REQUIRE(w);
    CHECK(w->length() >= 4);
    std::string why;
    CHECK(validate_cycle_witness(non_hypertree_cc(5), *w, &why));
  }
}

TEST_CASE("is_hypertree") {
  CHECK(is_hypertree(ht::sample_hypertree_order5()));
  CHECK(is_hypertree(tight_path(6, 3)));
  CHECK_FALSE(is_hypertree(flower(9, 3)));
  CHECK_FALSE(is_hypertree(non_hypertree_cc(5)));
}

TEST_CASE("is_edge_minimal") {
  CHECK(is_edge_minimal(tight_star(7, 3)));
  CHECK(is_edge_minimal(flower(6, 3)));
  CHECK_FALSE(is_edge_minimal(flower(5, 3)));
  CHECK(is_edge_minimal(flower(7, 3)));
  Hypergraph complete(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK_THROWS_AS(is_edge_minimal(complete), NotAHypertreeError);
}

TEST_CASE("is_edge_maximal") {
  SUBCASE("single full edge: nothing can be added") {
    CHECK(is_edge_maximal(Hypergraph(3, 3, {{0, 1, 2}})));
  }
  SUBCASE("star is not maximal: a leaf triple keeps semicycle-freeness") {
    Hypergraph h = tight_star(7, 3);
    CHECK_FALSE(is_edge_maximal(h));
    CHECK_FALSE(find_semicycle(h.with_edge({2, 3, 4})));
  }
  SUBCASE("non-hypertrees are rejected") {
    Hypergraph complete(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK_THROWS_AS(is_edge_maximal(complete), NotAHypertreeError);
  }
}

TEST_CASE("max_chain_length") {
  CHECK(max_chain_length(tight_path(7, 3)) == 5);
  CHECK(max_chain_length(tight_star(9, 4)) == 2);
  CHECK(max_chain_length(Hypergraph(3, 3, {{0, 1, 2}})) == 1);
  CHECK(max_chain_length(fano_plane()) == 1);
  CHECK_THROWS_AS(max_chain_length(Hypergraph(3, 3, {})), EmptyHypergraphError);
}

TEST_CASE("focus_vertices") {
  CHECK(focus_vertices(tight_star(7, 3)) == std::vector<int>{0, 1});
  CHECK(focus_vertices(flower(6, 3)) == std::vector<int>{0});
  CHECK(focus_vertices(tight_path(6, 3)).empty());
  CHECK_THROWS_AS(focus_vertices(Hypergraph(3, 3, {})), EmptyHypergraphError);
}

TEST_CASE("is_l_geometric") {
  SUBCASE("the Fano plane is 2-geometric with 7 lines") {
    Hypergraph f = fano_plane();
    CHECK(is_l_geometric(f, 2));
    CHECK(f.edge_count() == 7);
    CHECK_FALSE(is_l_geometric(f, 1));
    CHECK_FALSE(is_l_geometric(f, 3));
  }
  SUBCASE("a star is not 2-geometric: two leaves share no edge") {
    CHECK_FALSE(is_l_geometric(tight_star(7, 3), 2));
  }
  SUBCASE("a single spanning edge is l-geometric for every l") {
    Hypergraph h(3, 3, {{0, 1, 2}});
    CHECK(is_l_geometric(h, 1));
    CHECK(is_l_geometric(h, 2));
    CHECK(is_l_geometric(h, 3));
  }
  SUBCASE("parameter range") {
    CHECK_THROWS_AS(is_l_geometric(fano_plane(), 0), ParamError);
    CHECK_THROWS_AS(is_l_geometric(fano_plane(), 4), ParamError);
  }
}

TEST_CASE("classify") {
  SUBCASE("order-5 hypertree") {
    ClassificationReport r = classify(ht::sample_hypertree_order5());
    CHECK(r.hypertree);
    CHECK(r.chain_connected);
    CHECK(r.semicycle_free);
    CHECK_FALSE(r.line_graph_connected);
    CHECK(r.line_graph_components == 2);
  }
  SUBCASE("star") {
    ClassificationReport r = classify(tight_star(7, 3));
    CHECK(r.hypertree);
    REQUIRE(r.edge_minimal);
    CHECK(*r.edge_minimal);
    REQUIRE(r.edge_maximal);
    CHECK_FALSE(*r.edge_maximal);
    CHECK(r.max_chain_length == 2);
    CHECK(r.focus_vertices.size() == 2);
    CHECK_FALSE(r.geometric_l);
  }
  SUBCASE("two disjoint edges") {
    ClassificationReport r = classify(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}));
    CHECK_FALSE(r.chain_connected);
    CHECK_FALSE(r.hypertree);
    CHECK_FALSE(r.edge_minimal.has_value());
    CHECK(r.semicycle_free);
  }
  SUBCASE("empty hypergraph") {
    ClassificationReport r = classify(Hypergraph(3, 3, {}));
    CHECK_FALSE(r.chain_connected);
    CHECK(r.semicycle_free);
    CHECK(r.max_chain_length == 0);
    CHECK(r.focus_vertices.empty());
  }
  SUBCASE("Fano plane carries its geometric parameter") {
    ClassificationReport r = classify(fano_plane());
    CHECK(r.hypertree);
    REQUIRE(r.geometric_l);
    CHECK(*r.geometric_l == 2);
    REQUIRE(r.edge_minimal);
    CHECK(*r.edge_minimal);
  }
  SUBCASE("cross-check field appears on request") {
    ClassifyOptions opts;
    opts.cross_check_chain_connectivity = true;
    ClassificationReport r = classify(non_hypertree_cc(5), opts);
    CHECK(r.chain_connected);
    REQUIRE(r.chain_connected_general);
    CHECK(*r.chain_connected_general == r.chain_connected);
  }
}

TEST_CASE("witness soundness on random instances") {
  std::mt19937 rng(90125);
  for (int round = 0; round < 80; ++round) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = k + 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 9);
    Hypergraph h = ht::random_hypergraph(rng, n, k, m);
    std::string why;
    if (auto sc = find_semicycle(h))
      CHECK_MESSAGE(validate_semicycle_witness(h, *sc, &why), why);
    if (auto cy = find_tight_cycle(h))
      CHECK_MESSAGE(validate_cycle_witness(h, *cy, &why), why);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (auto ch = find_chain(h, u, v)) {
          CHECK_MESSAGE(validate_chain_witness(h, *ch, &why), why);
          const auto& s = ch->sequence;
          CHECK(std::find(s.begin(), s.end(), u) != s.end());
          CHECK(std::find(s.begin(), s.end(), v) != s.end());
        }
  }
}

TEST_CASE("chain law on the flower rim") {
  // rim vertices are ids 1..n-1; chains exist exactly below rim distance 2k-2
  for (int n = 5; n <= 10; ++n) {
    Hypergraph h = flower(n, 3);
    const int rim = n - 1;
    for (int i = 1; i <= rim; ++i)
      for (int j = i + 1; j <= rim; ++j) {
        int d = std::min(j - i, rim - (j - i));
        bool expect = d < 4;
        CHECK_MESSAGE(find_chain(h, i, j).has_value() == expect,
                      "flower(", n, ",3) pair ", i, ",", j);
      }
  }
}

TEST_CASE("search budget is enforced") {
  // complete 3-uniform on 7 vertices: plenty of runs, tiny budget
  std::vector<std::vector<int>> edges;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) edges.push_back({a, b, c});
  Hypergraph h(3, 7, edges);
  SearchLimits tiny{100};
  CHECK_THROWS_AS(max_chain_length(h, tiny), BudgetExceeded);
}
