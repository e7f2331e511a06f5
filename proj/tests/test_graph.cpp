#include <catch2/catch_amalgamated.hpp>

#include "bram/gen.hpp"
#include "bram/graph.hpp"
#include "bram/serialize.hpp"

using namespace bram;

TEST_CASE("complete bipartite graphs") {
  CHECK(BipartiteGraph::complete(1, 1).edge_count() == 1);
  CHECK(BipartiteGraph::complete(2, 2).edge_count() == 4);
  CHECK(BipartiteGraph::complete(3, 4).edge_count() == 12);
  CHECK(BipartiteGraph::complete(0, 5).edge_count() == 0);

  BipartiteGraph g = BipartiteGraph::complete(3, 4);
  for (int u = 0; u < 3; ++u) CHECK(g.left_degree(u) == 4);
  for (int v = 0; v < 4; ++v) CHECK(g.right_degree(v) == 3);
}

TEST_CASE("edge set semantics and bounds") {
  BipartiteGraph g(2, 3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK(g.edge_count() == 1);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
  CHECK_THROWS_AS(g.add_edge(2, 0), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
}

TEST_CASE("transpose") {
  BipartiteGraph g = BipartiteGraph::from_edges(2, 3, {{0, 2}, {1, 0}});
  BipartiteGraph t = g.transposed();
  CHECK(t.left_size() == 3);
  CHECK(t.right_size() == 2);
  CHECK(t.has_edge(2, 0));
  CHECK(t.has_edge(0, 1));
  CHECK(t.edge_count() == 2);
}

TEST_CASE("color classes") {
  EdgeColoring all_red(2, 2, 0);
  CHECK(all_red.color_class(0) == BipartiteGraph::complete(2, 2));
  CHECK(all_red.color_class(1).edge_count() == 0);

  EdgeColoring matchings(2, 2, 1);
  matchings.set_color(0, 0, 0);
  matchings.set_color(1, 1, 0);
  BipartiteGraph red = matchings.color_class(0);
  CHECK(red.edge_count() == 2);
  CHECK(red.has_edge(0, 0));
  CHECK(red.has_edge(1, 1));

  CHECK_THROWS_AS(all_red.color_class(2), std::out_of_range);
  CHECK_THROWS_AS(all_red.color_class(-1), std::out_of_range);
}

TEST_CASE("color classes partition the host") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 1 + int(seed % 5);
    int colors = 2 + int(seed % 3);
    EdgeColoring c = random_coloring(n, colors, seed);
    int total = 0;
    for (int i = 0; i < colors; ++i) total += c.color_class(i).edge_count();
    CHECK(total == n * n);
  }
}

TEST_CASE("graph JSON round trips") {
  CHECK(decode(encode(BipartiteGraph(0, 0))) == BipartiteGraph(0, 0));

  BipartiteGraph k23 = BipartiteGraph::complete(2, 3);
  Json j = graph_to_json(k23);
  // canonical (u,v)-lexicographic edge order
  std::vector<std::pair<int, int>> expect{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
  REQUIRE(j["edges"].size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(j["edges"][i][0].get<int>() == expect[i].first);
    CHECK(j["edges"][i][1].get<int>() == expect[i].second);
  }
  CHECK(decode(encode(k23)) == k23);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    BipartiteGraph g = random_bipartite(int(seed % 5), int((seed / 5) % 5), 0.4, seed);
    CHECK(decode(encode(g)) == g);
  }
}

TEST_CASE("graph JSON rejects malformed input naming the field") {
  CHECK_THROWS_MATCHES(decode(R"({"left":2,"right":2,"edges":[[2,0]]})"), ParseError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("edges")));
  CHECK_THROWS_MATCHES(decode(R"({"right":2,"edges":[]})"), ParseError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("left")));
  CHECK_THROWS_MATCHES(decode(R"({"left":-1,"right":2,"edges":[]})"), ParseError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("left")));
  CHECK_THROWS_AS(decode("not json"), ParseError);
}

TEST_CASE("coloring JSON round trips and validates") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EdgeColoring c = random_coloring(1 + int(seed % 4), 2 + int(seed % 2), seed);
    CHECK(coloring_from_json(coloring_to_json(c)) == c);
  }
  CHECK_THROWS_MATCHES(
      coloring_from_json(Json::parse(R"({"n":1,"colors":2,"matrix":[[2]]})")), ParseError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("matrix")));
  CHECK_THROWS_MATCHES(
      coloring_from_json(Json::parse(R"({"n":2,"colors":2,"matrix":[[0,0]]})")), ParseError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("matrix")));
}

TEST_CASE("certificate JSON round trips") {
  Certificate cert;
  cert.kind = CertificateKind::GoodColoring;
  cert.claims = {"demo claim"};
  cert.payload["x"] = 1;
  cert.seed = 42;
  Certificate back = certificate_from_json(certificate_to_json(cert));
  CHECK(back.kind == cert.kind);
  CHECK(back.claims == cert.claims);
  CHECK(back.payload == cert.payload);
  CHECK(back.seed == cert.seed);
  CHECK_THROWS_AS(
      certificate_from_json(Json::parse(R"({"kind":"bogus","claims":[],"payload":{},"meta":{}})")),
      ParseError);
}

TEST_CASE("generators are deterministic per seed") {
  CHECK(random_tree_bipartite(16, 5) == random_tree_bipartite(16, 5));
  CHECK(random_matching_coloring(8, 9) == random_matching_coloring(8, 9));
  BipartiteGraph tree = random_tree_bipartite(16, 5);
  CHECK(tree.edge_count() == 16);
  CHECK(tree.left_size() + tree.right_size() == 17);
  EdgeColoring m = random_matching_coloring(8, 9);
  BipartiteGraph red = m.color_class(0);
  CHECK(red.edge_count() == 8);
  for (int u = 0; u < 8; ++u) CHECK(red.left_degree(u) == 1);
  for (int v = 0; v < 8; ++v) CHECK(red.right_degree(v) == 1);
}
