#include <cmath>
#include <set>

#include "doctest.h"
#include "reactsim/error.hpp"
#include "reactsim/platform_policy.hpp"

using namespace reactsim;

namespace {

PlatformPolicyConfig explore(int delta) {
  PlatformPolicyConfig cfg;
  cfg.kind = PlatformPolicyKind::ExplorePeriodically;
  cfg.delta = delta;
  return cfg;
}

}  // namespace

TEST_CASE("fixed recommendation never changes") {
  PlatformPolicyConfig cfg;
  cfg.u0 = 1.0;
  PlatformPolicyState st(cfg, 7);
  for (long long k = 0; k < 50; ++k) {
    CHECK(st.recommend(k) == 1.0);
    st.observe_outcome(k, 1.0, k % 2 == 0, 0.5);
  }
}

TEST_CASE("exploration happens on multiples of delta") {
  PlatformPolicyState st(explore(18), 42);
  std::set<double> explored;
  double last = 0.0;
  for (long long k = 0; k < 90; ++k) {
    const double u = st.recommend(k);
    CHECK(st.recommend(k) == u);
    CHECK(st.is_exploration_step(k) == (k % 18 == 0));
    if (st.is_exploration_step(k)) explored.insert(u);
    if (!st.is_exploration_step(k) && k % 18 != 1) CHECK(u == last);
    st.observe_outcome(k, u, true, 1.0 - 0.1 * std::abs(u));
    last = u;
  }
  CHECK(explored.size() == 5);
}

TEST_CASE("best record needs a strict improvement") {
  PlatformPolicyState st(explore(100), 1);
  st.observe_outcome(0, 0.5, true, 0.8);
  REQUIRE(st.best().has_value());
  CHECK(st.best()->u == 0.5);
  st.observe_outcome(1, 0.3, true, 0.9);
  CHECK(st.best()->u == 0.3);
  st.observe_outcome(2, -0.2, true, 0.9);
  CHECK(st.best()->u == 0.3);
  st.observe_outcome(3, -0.7, false, 0.99);
  CHECK(st.best()->u == 0.3);
  CHECK(st.history().back().reward == 0.0);
}

TEST_CASE("without clicks the earliest explored value is exploited") {
  PlatformPolicyState st(explore(5), 3);
  const double first = st.recommend(0);
  st.observe_outcome(0, first, false, 0.0);
  for (long long k = 1; k < 5; ++k) {
    CHECK(st.recommend(k) == first);
    st.observe_outcome(k, first, false, 0.0);
  }
  const double second = st.recommend(5);
  st.observe_outcome(5, second, false, 0.0);
  CHECK(st.recommend(6) == first);
}

TEST_CASE("same seed gives the same exploration draws") {
  PlatformPolicyState a(explore(2), 99), b(explore(2), 99), c(explore(2), 100);
  bool differs = false;
  for (long long k = 0; k < 40; k += 2) {
    CHECK(a.recommend(k) == b.recommend(k));
    differs = differs || a.recommend(k) != c.recommend(k);
  }
  CHECK(differs);
}

TEST_CASE("platform configuration is validated") {
  PlatformPolicyConfig bad;
  bad.u0 = 1.5;
  CHECK_THROWS_AS(validate_platform_config(bad), Error);
  CHECK_THROWS_AS(validate_platform_config(explore(0)), Error);
  auto wide = explore(3);
  wide.explore = Distribution::uniform(-2.0, 1.0);
  CHECK_THROWS_AS(validate_platform_config(wide), Error);
}
