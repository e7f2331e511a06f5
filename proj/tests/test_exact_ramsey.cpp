#include <catch2/catch_amalgamated.hpp>

#include "bram/exact_ramsey.hpp"
#include "bram/pattern.hpp"
#include "oracles.hpp"

using namespace bram;

namespace {
const BipartiteGraph kK11 = BipartiteGraph::complete(1, 1);
const BipartiteGraph kK22 = BipartiteGraph::complete(2, 2);
const BipartiteGraph kP3 = BipartiteGraph::complete(1, 2);  // path with 2 edges

SearchBudget workers(int w) {
  SearchBudget b;
  b.workers = w;
  return b;
}
}  // namespace

TEST_CASE("good colorings for the four-cycle pair") {
  ColoringSearchResult at4 = exists_good_coloring(kK22, kK22, 4);
  REQUIRE(at4.status == SearchStatus::Found);
  REQUIRE(at4.witness.has_value());
  CHECK_FALSE(find_subgraph_copy(at4.witness->color_class(0), kK22).has_value());
  CHECK_FALSE(find_subgraph_copy(at4.witness->color_class(1), kK22).has_value());

  ColoringSearchResult at5 = exists_good_coloring(kK22, kK22, 5);
  CHECK(at5.status == SearchStatus::None);
  CHECK(at5.nodes > 0);
}

TEST_CASE("single edge forces monochromatic immediately") {
  CHECK(exists_good_coloring(kK11, kK11, 1).status == SearchStatus::None);
}

TEST_CASE("witness is the lexicographically least good coloring") {
  for (int n = 1; n <= 3; ++n) {
    ColoringSearchResult res = exists_good_coloring(kP3, kP3, n);
    auto oracle = oracles::lex_min_good_coloring(kP3, kP3, n);
    REQUIRE(res.status != SearchStatus::Indeterminate);
    CHECK((res.status == SearchStatus::Found) == oracle.has_value());
    if (oracle) {
      REQUIRE(res.witness.has_value());
      CHECK(*res.witness == *oracle);
    }
  }
  ColoringSearchResult res = exists_good_coloring(kK22, kK22, 3);
  auto oracle = oracles::lex_min_good_coloring(kK22, kK22, 3);
  REQUIRE(res.witness.has_value());
  REQUIRE(oracle.has_value());
  CHECK(*res.witness == *oracle);
}

TEST_CASE("downward closure") {
  // a good coloring exists at 4 for (K22,K22), so it must exist below
  for (int n = 1; n <= 4; ++n)
    CHECK(exists_good_coloring(kK22, kK22, n).status == SearchStatus::Found);
}

TEST_CASE("exact bipartite Ramsey numbers") {
  BrResult r11 = br_exact(kK11, kK11, workers(1));
  REQUIRE(r11.status == SearchStatus::Found);
  CHECK(r11.value == 1);
  CHECK_FALSE(r11.witness_below.has_value());

  BrResult p3 = br_exact(kP3, kP3, workers(1));
  REQUIRE(p3.status == SearchStatus::Found);
  CHECK(p3.value == 3);
  REQUIRE(p3.witness_below.has_value());
  CHECK(p3.witness_below->host_side() == 2);

  BrResult k22 = br_exact(kK22, kK22, workers(2));
  REQUIRE(k22.status == SearchStatus::Found);
  CHECK(k22.value == 5);
  REQUIRE(k22.witness_below.has_value());
  CHECK_FALSE(find_subgraph_copy(k22.witness_below->color_class(0), kK22).has_value());
  CHECK_FALSE(find_subgraph_copy(k22.witness_below->color_class(1), kK22).has_value());
}

TEST_CASE("color-swap symmetry") {
  BrResult a = br_exact(kP3, kK22, workers(1));
  BrResult b = br_exact(kK22, kP3, workers(1));
  REQUIRE(a.status == SearchStatus::Found);
  REQUIRE(b.status == SearchStatus::Found);
  CHECK(a.value == b.value);
  CHECK(a.value == 4);
}

TEST_CASE("multicolor searches") {
  ColoringSearchResult two_matchings = exists_good_coloring_multi(2, 2, 2, 2);
  REQUIRE(two_matchings.status == SearchStatus::Found);
  REQUIRE(two_matchings.witness.has_value());
  for (int c = 0; c < 2; ++c)
    CHECK_FALSE(find_even_cycle(two_matchings.witness->color_class(c), 4).has_value());
  CHECK_FALSE(find_biclique(two_matchings.witness->color_class(2), 2).has_value());

  // k=1, t=2 matches the pair search because C_4 = K_{2,2}
  CHECK(exists_good_coloring_multi(2, 1, 2, 4).status == SearchStatus::Found);
  CHECK(exists_good_coloring_multi(2, 1, 2, 5).status == SearchStatus::None);
}

TEST_CASE("determinism across worker counts") {
  ColoringSearchResult w1 = exists_good_coloring(kK22, kK22, 4, workers(1));
  ColoringSearchResult w4 = exists_good_coloring(kK22, kK22, 4, workers(4));
  REQUIRE(w1.witness.has_value());
  REQUIRE(w4.witness.has_value());
  CHECK(*w1.witness == *w4.witness);

  ColoringSearchResult n1 = exists_good_coloring(kK22, kK22, 5, workers(1));
  ColoringSearchResult n4 = exists_good_coloring(kK22, kK22, 5, workers(4));
  CHECK(n1.status == SearchStatus::None);
  CHECK(n4.status == SearchStatus::None);
  CHECK(n1.nodes == n4.nodes);
}

TEST_CASE("budgets produce indeterminate, not none") {
  SearchBudget tiny;
  tiny.node_limit = 16;
  ColoringSearchResult res = exists_good_coloring(kK22, kK22, 5, tiny);
  CHECK(res.status == SearchStatus::Indeterminate);

  SearchBudget small_nmax;
  small_nmax.n_max = 2;
  CHECK_THROWS_AS(exists_good_coloring(kK22, kK22, 3, small_nmax), ResourceError);
  BrResult br = br_exact(kK22, kK22, small_nmax);
  CHECK(br.status == SearchStatus::Indeterminate);
  CHECK(br.last_witnessed == 2);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(exists_good_coloring_multi(1, 1, 2, 2), std::domain_error);
  CHECK_THROWS_AS(exists_good_coloring_multi(2, 0, 2, 2), std::domain_error);
  CHECK_THROWS_AS(exists_good_coloring(kK22, kK22, 0), std::domain_error);
}
