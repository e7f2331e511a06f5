#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "bram/pattern.hpp"
#include "bram/zarankiewicz.hpp"
#include "oracles.hpp"

using namespace bram;

TEST_CASE("exact biclique-free values at desk scale") {
  CHECK(z_exact(2, 2).value == 3);
  CHECK(z_exact(3, 2).value == 6);
  CHECK(z_exact(4, 2).value == 9);
  CHECK(z_exact(5, 2).value == 12);

  // independent full enumeration for r <= 3
  for (int r = 1; r <= 3; ++r) {
    int oracle = oracles::z_by_full_enumeration(
        r, [](const BipartiteGraph& g) { return oracles::contains_biclique(g, 2); });
    CHECK(z_exact(r, 2).value == oracle);
  }
  int oracle33 = oracles::z_by_full_enumeration(
      3, [](const BipartiteGraph& g) { return oracles::contains_biclique(g, 3); });
  CHECK(z_exact(3, 3).value == oracle33);
}

TEST_CASE("exact cycle-free values at desk scale") {
  CHECK(z_cycle_exact(2, 2).value == 3);
  CHECK(z_cycle_exact(3, 2).value == 6);
  CHECK(z_cycle_exact(2, 3).value == 4);  // K_{2,2} cannot host a C_6

  for (int r = 1; r <= 3; ++r) {
    int oracle = oracles::z_by_full_enumeration(
        r, [](const BipartiteGraph& g) { return oracles::contains_cycle(g, 4); });
    CHECK(z_cycle_exact(r, 2).value == oracle);
  }
  int oracle_c6 = oracles::z_by_full_enumeration(
      3, [](const BipartiteGraph& g) { return oracles::contains_cycle(g, 6); });
  CHECK(z_cycle_exact(3, 3).value == oracle_c6);
}

TEST_CASE("witnesses are clean and extremal records consistent") {
  for (int r = 1; r <= 5; ++r) {
    ExtremalRecord rec = z_exact(r, 2);
    CHECK(rec.witness.edge_count() == rec.value);
    CHECK(rec.value <= r * r);
    CHECK_FALSE(find_biclique(rec.witness, 2).has_value());
  }
  ExtremalRecord cyc = z_cycle_exact(4, 3);
  CHECK_FALSE(find_even_cycle(cyc.witness, 6).has_value());
  CHECK(cyc.witness.edge_count() == cyc.value);
}

TEST_CASE("cycle and biclique agree for the four-cycle") {
  for (int r = 1; r <= 5; ++r) CHECK(z_cycle_exact(r, 2).value == z_exact(r, 2).value);
}

TEST_CASE("monotonicity in the host side") {
  for (int r = 1; r < 5; ++r) {
    CHECK(z_exact(r + 1, 2).value >= z_exact(r, 2).value);
    CHECK(z_cycle_exact(r + 1, 3).value >= z_cycle_exact(r, 3).value);
  }
}

TEST_CASE("closed-form bound values") {
  CHECK_THAT(bollobas_bound(3, 2), Catch::Matchers::WithinAbs(2.0 * std::sqrt(3.0) + 3.0, 1e-12));
  CHECK_THAT(bollobas_bound(2, 2), Catch::Matchers::WithinAbs(std::sqrt(2.0) + 2.0, 1e-12));
  CHECK_THROWS_AS(bollobas_bound(1, 2), std::domain_error);
  CHECK_THROWS_AS(bollobas_bound(3, 1), std::domain_error);

  CHECK_THAT(naor_verstraete_bound(4, 2), Catch::Matchers::WithinAbs(16.0, 1e-12));
  CHECK_THAT(naor_verstraete_bound(8, 3), Catch::Matchers::WithinAbs(96.0, 1e-9));
  CHECK_THAT(naor_verstraete_bound(1, 2), Catch::Matchers::WithinAbs(3.0, 1e-12));
  CHECK_THROWS_AS(naor_verstraete_bound(4, 1), std::domain_error);
  CHECK_THROWS_AS(naor_verstraete_bound(0, 2), std::domain_error);
}

TEST_CASE("exact values sit below the closed-form bounds") {
  for (int r = 2; r <= 5; ++r)
    for (int s = 2; s <= r; ++s) CHECK(double(z_exact(r, s).value) <= bollobas_bound(r, s));
  for (int r = 1; r <= 5; ++r)
    for (int t : {2, 3})
      CHECK(double(z_cycle_exact(r, t).value) <= naor_verstraete_bound(r, t));
}

TEST_CASE("domain and budget errors") {
  CHECK_THROWS_AS(z_exact(0, 2), std::domain_error);
  CHECK_THROWS_AS(z_exact(2, 0), std::domain_error);
  CHECK_THROWS_AS(z_cycle_exact(2, 1), std::domain_error);
  ZBudget tiny;
  tiny.node_limit = 3;
  CHECK_THROWS_MATCHES(z_exact(4, 2, tiny), ResourceError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("node-limit")));
}

TEST_CASE("on-disk record cache") {
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "bram_test_zcache.jsonl";
  std::filesystem::remove(path);
  {
    ZCache cache(path.string());
    ExtremalRecord rec = z_exact(4, 2, {}, &cache);
    CHECK(rec.value == 9);
    CHECK(cache.lookup(4, {ForbiddenPattern::Kind::Biclique, 2}).has_value());
  }
  {
    ZCache cache(path.string());
    auto hit = cache.lookup(4, {ForbiddenPattern::Kind::Biclique, 2});
    REQUIRE(hit.has_value());
    ExtremalRecord again = z_exact(4, 2, {}, &cache);
    CHECK(again.value == 9);
    CHECK(again.witness == hit->witness);
    CHECK(again.nodes == hit->nodes);
  }
  std::filesystem::remove(path);
}

TEST_CASE("search is deterministic") {
  ExtremalRecord a = z_exact(5, 2);
  ExtremalRecord b = z_exact(5, 2);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes == b.nodes);
}
