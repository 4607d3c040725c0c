#include <cmath>

#include "doctest.h"
#include "reactsim/engine.hpp"
#include "reactsim/error.hpp"
#include "reactsim/payoffs.hpp"

using namespace reactsim;

namespace {

OpinionTrace handmade(int len, bool clicked, double x, double u) {
  OpinionTrace t;
  t.meta.x0 = x;
  for (int k = 0; k < len; ++k) {
    const double d = std::abs(x - u);
    t.steps.push_back(StepRecord{k, x, u, clicked, clicked ? 1.0 : 0.0,
                                 clicked ? std::max(0.0, 1.0 - 0.1 * d) : 0.0});
  }
  t.final_x = x;
  return t;
}

}  // namespace

TEST_CASE("reward functions") {
  CHECK(RewardFn::constant()(1.7) == 1.0);
  CHECK(RewardFn::linear(0.1)(2.0) == doctest::Approx(0.8));
  CHECK(RewardFn::linear(1.0)(2.0) == 0.0);
  CHECK_THROWS_AS(validate_reward(RewardFn::linear(1.5)), Error);
  CHECK_THROWS_AS(validate_lambda(-0.1), Error);
}

TEST_CASE("agent utility") {
  const auto all = handmade(10, true, 0.3, 0.3);
  CHECK(agent_utility(all, RewardFn::constant(), 0.5) == doctest::Approx(0.5));
  const auto none = handmade(10, false, 0.3, 0.9);
  CHECK(agent_utility(none, RewardFn::constant(), 1.0) == 0.0);
  CHECK_THROWS_AS(agent_utility(OpinionTrace{}, RewardFn::constant(), 0.5), Error);
}

TEST_CASE("platform payoff") {
  CHECK(platform_payoff(handmade(10, false, 0.0, 1.0), RewardFn::constant()) == 0.0);
  CHECK(platform_payoff(handmade(10, true, 0.0, 1.0), RewardFn::constant()) == 1.0);
  CHECK(platform_payoff(handmade(10, true, -1.0, 1.0), RewardFn::linear(0.1)) ==
        doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(platform_payoff(OpinionTrace{}, RewardFn::constant()), Error);
}

TEST_CASE("utility series ends at the full-trace values") {
  RunSpec spec;
  spec.x0 = -1.0;
  spec.geometry = BlockGeometry{8, 5};
  spec.agent = AgentPolicyConfig{AgentPolicyKind::AdaptiveDecreasing, 8, 2.0, 3, 0.1};
  spec.platform.u0 = 1.0;
  spec.rewards = RewardFns{RewardFn::constant(), RewardFn::linear(0.1)};
  const auto trace = run(spec);
  const auto series = utility_series(trace, spec.rewards, 0.5);
  REQUIRE(series.size() == 40);
  CHECK(series.front().k == 1);
  CHECK(series.back().agent == agent_utility(trace, spec.rewards.agent, 0.5));
  CHECK(series.back().platform == platform_payoff(trace, spec.rewards.platform));

  const auto one = handmade(1, true, 0.2, 0.2);
  const auto single = utility_series(one, RewardFns{}, 0.3);
  REQUIRE(single.size() == 1);
  CHECK(single[0].agent == agent_utility(one, RewardFn::constant(), 0.3));

  const auto flat = utility_series(handmade(6, true, 0.1, 0.1), RewardFns{}, 0.5);
  for (const auto& p : flat) CHECK(p.platform == 1.0);
}

TEST_CASE("long-horizon fixed utility approaches its limit") {
  RunSpec spec;
  spec.x0 = -1.0;
  spec.geometry = BlockGeometry{8, 1250};
  spec.agent = AgentPolicyConfig{AgentPolicyKind::Fixed, 8};
  spec.platform.u0 = 1.0;
  const auto trace = run(spec);
  CHECK(std::abs(agent_utility(trace, RewardFn::constant(), 0.5) + 0.1875) < 1e-3);
}
