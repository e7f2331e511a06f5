#include <catch2/catch_amalgamated.hpp>

#include "bram/gen.hpp"
#include "bram/pattern.hpp"
#include "oracles.hpp"

using namespace bram;

namespace {

BipartiteGraph six_cycle() {
  // C_6 on 3+3: left i joined to right i and right (i+1) mod 3
  return BipartiteGraph::from_edges(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
}

BipartiteGraph matching(int k) {
  BipartiteGraph g(k, k);
  for (int i = 0; i < k; ++i) g.add_edge(i, i);
  return g;
}

}  // namespace

TEST_CASE("biclique search basics") {
  auto w = find_biclique(BipartiteGraph::complete(2, 2), 2);
  REQUIRE(w.has_value());
  CHECK(w->left == std::vector<int>{0, 1});
  CHECK(w->right == std::vector<int>{0, 1});
  CHECK(verify_biclique(BipartiteGraph::complete(2, 2), *w));

  CHECK_FALSE(find_biclique(matching(3), 2).has_value());
  CHECK_FALSE(find_biclique(six_cycle(), 2).has_value());
  CHECK_FALSE(oracles::contains_biclique(six_cycle(), 2));
  CHECK_THROWS_AS(find_biclique(matching(2), 0), std::invalid_argument);
}

TEST_CASE("biclique witness is lexicographically least") {
  // two disjoint K_{2,2}: {2,3}x{2,3} and {0,1}x{0,1}; least pair expected
  BipartiteGraph g(4, 4);
  for (int u : {0, 1})
    for (int v : {0, 1}) g.add_edge(u, v);
  for (int u : {2, 3})
    for (int v : {2, 3}) g.add_edge(u, v);
  auto w = find_biclique(g, 2);
  REQUIRE(w.has_value());
  CHECK(w->left == std::vector<int>{0, 1});
  CHECK(w->right == std::vector<int>{0, 1});
}

TEST_CASE("even cycle search basics") {
  auto c4 = find_even_cycle(BipartiteGraph::complete(2, 2), 4);
  REQUIRE(c4.has_value());
  CHECK(verify_cycle(BipartiteGraph::complete(2, 2), *c4, 4));

  auto c6 = find_even_cycle(BipartiteGraph::complete(3, 3), 6);
  REQUIRE(c6.has_value());
  CHECK(verify_cycle(BipartiteGraph::complete(3, 3), *c6, 6));
  CHECK(oracles::contains_cycle(BipartiteGraph::complete(3, 3), 6));

  BipartiteGraph tree = random_tree_bipartite(7, 3);
  CHECK_FALSE(find_even_cycle(tree, 4).has_value());

  CHECK_THROWS_AS(find_even_cycle(tree, 3), std::invalid_argument);
  CHECK_THROWS_AS(find_even_cycle(tree, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_even_cycle(tree, 5), std::invalid_argument);
}

TEST_CASE("exact length, not at-most or at-least") {
  // C_6 contains no C_4; K_{3,3} contains both C_4 and C_6
  CHECK_FALSE(find_even_cycle(six_cycle(), 4).has_value());
  CHECK(find_even_cycle(six_cycle(), 6).has_value());
  CHECK(find_even_cycle(BipartiteGraph::complete(3, 3), 4).has_value());
}

TEST_CASE("subgraph copy basics") {
  BipartiteGraph edge = BipartiteGraph::complete(1, 1);
  auto w = find_subgraph_copy(six_cycle(), edge);
  REQUIRE(w.has_value());
  CHECK(verify_copy(six_cycle(), edge, *w));

  // P4 (path with 3 edges) inside C4
  BipartiteGraph p4 = BipartiteGraph::from_edges(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  BipartiteGraph c4 = BipartiteGraph::complete(2, 2);
  CHECK(oracles::contains_copy(c4, p4));
  auto wp = find_subgraph_copy(c4, p4);
  REQUIRE(wp.has_value());
  CHECK(verify_copy(c4, p4, *wp));

  CHECK_FALSE(find_subgraph_copy(six_cycle(), BipartiteGraph::complete(2, 2)).has_value());
  CHECK_FALSE(oracles::contains_copy(six_cycle(), BipartiteGraph::complete(2, 2)));
}

TEST_CASE("copies may flip host sides") {
  // pattern K_{1,2} fits host K_{2,1} only after flipping
  BipartiteGraph claw = BipartiteGraph::complete(1, 2);
  BipartiteGraph host = BipartiteGraph::complete(2, 1);
  auto w = find_subgraph_copy(host, claw);
  REQUIRE(w.has_value());
  CHECK(w->flipped);
  CHECK(verify_copy(host, claw, *w));
}

TEST_CASE("isolated pattern vertices are ignored") {
  BipartiteGraph pattern(2, 1);
  pattern.add_edge(0, 0);  // left 1 isolated
  BipartiteGraph host = BipartiteGraph::complete(1, 1);
  auto w = find_subgraph_copy(host, pattern);
  REQUIRE(w.has_value());
  CHECK(w->map_left[1] == -1);
  CHECK(verify_copy(host, pattern, *w));
}

TEST_CASE("oracle equivalence on small hosts and patterns") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    BipartiteGraph host = random_bipartite(1 + int(seed % 4), 1 + int((seed / 4) % 4), 0.5, seed);
    BipartiteGraph pattern =
        random_bipartite(1 + int(seed % 3), 1 + int((seed / 3) % 3), 0.5, seed * 77 + 1);
    if (pattern.edge_count() > 4) continue;
    ++checked;
    CHECK(find_subgraph_copy(host, pattern).has_value() == oracles::contains_copy(host, pattern));
    for (int s : {1, 2})
      CHECK(find_biclique(host, s).has_value() == oracles::contains_biclique(host, s));
    for (int two_t : {4, 6})
      CHECK(find_even_cycle(host, two_t).has_value() == oracles::contains_cycle(host, two_t));
  }
  CHECK(checked > 100);
}

TEST_CASE("biclique(2) and cycle(4) coincide") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    BipartiteGraph g = random_bipartite(1 + int(seed % 6), 1 + int((seed / 6) % 6), 0.45, seed);
    CHECK(find_biclique(g, 2).has_value() == find_even_cycle(g, 4).has_value());
  }
}

TEST_CASE("adding an edge never loses a witness") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BipartiteGraph g = random_bipartite(4, 4, 0.4, seed);
    bool before = find_biclique(g, 2).has_value();
    Rng rng(seed + 1000);
    int u = int(rng.next_below(4)), v = int(rng.next_below(4));
    g.add_edge(u, v);
    if (before) CHECK(find_biclique(g, 2).has_value());
    bool cyc_before = find_even_cycle(g, 4).has_value();
    g.add_edge(int(rng.next_below(4)), int(rng.next_below(4)));
    if (cyc_before) CHECK(find_even_cycle(g, 4).has_value());
  }
}

TEST_CASE("through-edge helpers agree with full searches") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    BipartiteGraph g = random_bipartite(1 + int(seed % 4), 1 + int((seed / 4) % 4), 0.5, seed);
    for (int s : {1, 2}) {
      bool any = false;
      for (auto [u, v] : g.edges_lex()) any = any || biclique_through_edge(g, u, v, s);
      CHECK(any == find_biclique(g, s).has_value());
    }
    for (int two_t : {4, 6}) {
      bool any = false;
      for (auto [u, v] : g.edges_lex()) any = any || cycle_through_edge(g, u, v, two_t);
      CHECK(any == find_even_cycle(g, two_t).has_value());
    }
    BipartiteGraph pattern = random_bipartite(2, 2, 0.6, seed * 31 + 7);
    if (pattern.edge_count() >= 1) {
      bool any = false;
      for (auto [u, v] : g.edges_lex()) any = any || copy_through_edge(g, pattern, u, v);
      CHECK(any == find_subgraph_copy(g, pattern).has_value());
    }
  }
}

TEST_CASE("witness soundness rejects corrupted witnesses") {
  BipartiteGraph g = six_cycle();
  auto w = find_even_cycle(g, 6);
  REQUIRE(w.has_value());
  PatternWitness bad = *w;
  bad.cycle[1] = (bad.cycle[1] + 1) % 3;
  // either a missing edge or a repeated vertex; both must be rejected
  CHECK_FALSE(verify_cycle(g, bad, 6));

  auto wb = find_biclique(BipartiteGraph::complete(2, 2), 2);
  REQUIRE(wb.has_value());
  PatternWitness badb = *wb;
  badb.left = {0, 0};
  CHECK_FALSE(verify_biclique(BipartiteGraph::complete(2, 2), badb));
}

TEST_CASE("budgeted biclique search reports exhaustion honestly") {
  BipartiteGraph g = random_bipartite(6, 6, 0.5, 3);
  BicliqueSearchResult full = find_biclique_budgeted(g, 3);
  CHECK(full.exhausted);
  BicliqueSearchResult tiny = find_biclique_budgeted(g, 3, 1);
  CHECK((tiny.witness.has_value() || !tiny.exhausted));
}
