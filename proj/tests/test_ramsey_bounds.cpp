#include <catch2/catch_amalgamated.hpp>

#include "bram/ramsey_bounds.hpp"

using namespace bram;

namespace {
CountingConfig cfg(int n, int t, int k, CountMode mode, double c = 1.0) {
  CountingConfig out;
  out.n = n;
  out.t = t;
  out.k = k;
  out.c = c;
  out.mode = mode;
  return out;
}
}  // namespace

TEST_CASE("exact-mode counting certificates") {
  UpperBoundCheck at5 = certify_upper_bound(cfg(2, 2, 1, CountMode::Exact), 5);
  CHECK(at5.certified);
  CHECK(at5.lhs == 24.0);
  CHECK(at5.rhs == 25.0);

  UpperBoundCheck at4 = certify_upper_bound(cfg(2, 2, 1, CountMode::Exact), 4);
  CHECK_FALSE(at4.certified);
  CHECK(at4.lhs == 18.0);
  CHECK(at4.rhs == 16.0);

  UpperBoundCheck tiny = certify_upper_bound(cfg(1, 2, 1, CountMode::Exact), 1);
  CHECK_FALSE(tiny.certified);
  CHECK(tiny.lhs == 1.0);
  CHECK(tiny.rhs == 1.0);
}

TEST_CASE("smallest certified host side") {
  auto r = smallest_certified_r(cfg(2, 2, 1, CountMode::Exact), 6);
  REQUIRE(r.has_value());
  CHECK(*r == 5);

  auto r1 = smallest_certified_r(cfg(1, 2, 1, CountMode::Exact), 3);
  REQUIRE(r1.has_value());
  CHECK(*r1 == 2);  // 3 + 0 < 4

  CHECK_FALSE(smallest_certified_r(cfg(3, 2, 1, CountMode::Bound), 2).has_value());
}

TEST_CASE("bound mode enforces its hypothesis") {
  CHECK_THROWS_AS(certify_upper_bound(cfg(3, 2, 1, CountMode::Bound), 2), std::domain_error);
  CHECK_THROWS_AS(certify_upper_bound(cfg(1, 2, 1, CountMode::Bound), 5), std::domain_error);
  // r >= n >= 2 is fine even when it does not certify
  CHECK_NOTHROW(certify_upper_bound(cfg(2, 2, 1, CountMode::Bound), 4));
}

TEST_CASE("bound-mode certification implies exact-mode certification") {
  for (int r = 2; r <= 5; ++r) {
    UpperBoundCheck bound = certify_upper_bound(cfg(2, 2, 1, CountMode::Bound), r);
    UpperBoundCheck exact = certify_upper_bound(cfg(2, 2, 1, CountMode::Exact), r);
    CHECK(exact.lhs <= bound.lhs + 1e-9);
    if (bound.certified) CHECK(exact.certified);
  }
}

TEST_CASE("asymptotic host-size formula") {
  CHECK(asymptotic_r(3, 1.0) == 8);
  CHECK(asymptotic_r(100, 1.0) == 472);
  CHECK_THROWS_AS(asymptotic_r(100, 0.0), std::domain_error);
  CHECK_THROWS_AS(asymptotic_r(100, -1.0), std::domain_error);
  CHECK_THROWS_AS(asymptotic_r(1, 1.0), std::domain_error);
}

TEST_CASE("ratio margin regression anchors") {
  // Frozen values from direct evaluation of the two closed-form bounds at
  // r = ceil(n^2/ln^2 n); negative throughout this range for c = 1, and
  // increasing toward zero.
  double m4 = ratio_margin(cfg(10000, 2, 2, CountMode::Bound, 1.0));
  double m5 = ratio_margin(cfg(100000, 2, 2, CountMode::Bound, 1.0));
  double m6 = ratio_margin(cfg(1000000, 2, 2, CountMode::Bound, 1.0));
  CHECK_THAT(m4, Catch::Matchers::WithinRel(-0.0013726404283855853, 1e-9));
  CHECK_THAT(m5, Catch::Matchers::WithinRel(-0.00016414159768696202, 1e-9));
  CHECK_THAT(m6, Catch::Matchers::WithinRel(-1.9069528103488054e-05, 1e-9));
  CHECK(m4 < m5);
  CHECK(m5 < m6);

  // asymptotics not yet active at n = 10: sign asserted after computation
  CHECK(ratio_margin(cfg(10, 2, 2, CountMode::Bound, 1.0)) < 0.0);

  // a larger constant does push the margin positive in this range
  CHECK(ratio_margin(cfg(1000000, 2, 2, CountMode::Bound, 9.0)) > 0.0);

  CHECK_THROWS_AS(ratio_margin(cfg(10000, 2, 2, CountMode::Exact)), std::invalid_argument);
}

TEST_CASE("size-linearity obstruction") {
  CHECK(size_linearity_obstruction(3, 4));
  CHECK_FALSE(size_linearity_obstruction(4, 5));
  CHECK_FALSE(size_linearity_obstruction(2, 100));
  CHECK(size_linearity_obstruction(4, 6));
  CHECK_FALSE(size_linearity_obstruction(3, 3));
  CHECK_THROWS_AS(size_linearity_obstruction(0, 5), std::domain_error);
  CHECK_THROWS_AS(size_linearity_obstruction(3, -1), std::domain_error);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(certify_upper_bound(cfg(0, 2, 1, CountMode::Exact), 2), std::domain_error);
  CHECK_THROWS_AS(certify_upper_bound(cfg(2, 1, 1, CountMode::Exact), 2), std::domain_error);
  CHECK_THROWS_AS(certify_upper_bound(cfg(2, 2, 0, CountMode::Exact), 2), std::domain_error);
  CHECK_THROWS_AS(certify_upper_bound(cfg(2, 2, 1, CountMode::Exact, 0.0), 2), std::domain_error);
  CHECK_THROWS_AS(certify_upper_bound(cfg(2, 2, 1, CountMode::Exact), 0), std::domain_error);
}
