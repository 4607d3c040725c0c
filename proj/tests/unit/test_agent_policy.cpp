#include "doctest.h"
#include "reactsim/agent_policy.hpp"
#include "reactsim/error.hpp"

using namespace reactsim;

namespace {

AgentPolicyState make(AgentPolicyKind kind, int t0, double kappa = 2.0, int tau = 3,
                      double x_drift = 0.1) {
  return AgentPolicyState(AgentPolicyConfig{kind, t0, kappa, tau, x_drift}, BlockGeometry{8, 10});
}

}  // namespace

TEST_CASE("clicking happens in the first T steps of a block") {
  const auto fixed = make(AgentPolicyKind::Fixed, 8);
  for (int j = 0; j < 8; ++j) CHECK(fixed.decide_click(j));
  const auto idle = make(AgentPolicyKind::Decreasing, 0);
  for (int j = 0; j < 8; ++j) CHECK_FALSE(idle.decide_click(j));
  auto dec = make(AgentPolicyKind::Decreasing, 8).end_of_block_update(0.0, 0.0);
  CHECK(dec.current_clicks() == 4);
  CHECK(dec.decide_click(3));
  CHECK_FALSE(dec.decide_click(4));
}

TEST_CASE("between-block rules") {
  auto fixed = make(AgentPolicyKind::Fixed, 5);
  for (int i = 0; i < 5; ++i) fixed = fixed.end_of_block_update(0.9, -1.0);
  CHECK(fixed.current_clicks() == 5);
  CHECK(fixed.current_block() == 5);

  auto dec = make(AgentPolicyKind::Decreasing, 1);
  dec = dec.end_of_block_update(0.0, 0.0);
  CHECK(dec.current_clicks() == 0);
  for (int i = 0; i < 4; ++i) dec = dec.end_of_block_update(0.0, 0.0);
  CHECK(dec.current_clicks() == 0);

  auto ada = make(AgentPolicyKind::AdaptiveDecreasing, 8);
  CHECK(ada.end_of_block_update(-0.95, -1.0).current_clicks() == 8);
  CHECK(ada.end_of_block_update(-0.85, -1.0).current_clicks() == 5);
  auto low = make(AgentPolicyKind::AdaptiveDecreasing, 2);
  CHECK(low.end_of_block_update(0.5, -1.0).current_clicks() == 0);
}

TEST_CASE("decreasing schedule reaches zero") {
  CHECK(decreased_clicks(8, 2.0) == 4);
  CHECK(decreased_clicks(1, 2.0) == 0);
  CHECK(decreased_clicks(7, 1.5) == 4);
  CHECK(first_zero_block(make(AgentPolicyKind::Decreasing, 8)) == 4);
  CHECK(first_zero_block(make(AgentPolicyKind::Decreasing, 1)) == 1);
  CHECK(first_zero_block(make(AgentPolicyKind::Decreasing, 8, 8.0)) == 2);
  CHECK_THROWS_AS(first_zero_block(make(AgentPolicyKind::Fixed, 8)), Error);
  CHECK_THROWS_AS(first_zero_block(make(AgentPolicyKind::Decreasing, 8, 1.0)), Error);
}

TEST_CASE("policy constants are validated") {
  CHECK_THROWS_AS(make(AgentPolicyKind::Fixed, 9), Error);
  CHECK_THROWS_AS(make(AgentPolicyKind::Fixed, -1), Error);
  CHECK_THROWS_AS(make(AgentPolicyKind::Decreasing, 4, 0.5), Error);
  CHECK_THROWS_AS(make(AgentPolicyKind::AdaptiveDecreasing, 4, 2.0, 0), Error);
  CHECK_THROWS_AS(make(AgentPolicyKind::AdaptiveDecreasing, 4, 2.0, 1, 0.0), Error);
  CHECK_THROWS_AS(validate_geometry(0, 3), Error);
  CHECK_THROWS_AS(validate_geometry(3, 0), Error);
  CHECK(parse_agent_policy_kind("adaptive") == AgentPolicyKind::AdaptiveDecreasing);
  CHECK(to_string(AgentPolicyKind::Decreasing) == "decreasing");
  CHECK_THROWS_AS(parse_agent_policy_kind("greedy"), Error);
}
