#include <cmath>

#include "doctest.h"
#include "reactsim/engine.hpp"
#include "reactsim/error.hpp"
#include "reactsim/oracle.hpp"

using namespace reactsim;

namespace {

RunSpec reference_spec(AgentPolicyKind kind) {
  RunSpec spec;
  spec.x0 = -1.0;
  spec.geometry = BlockGeometry{8, 10};
  spec.agent = AgentPolicyConfig{kind, 8, 2.0, 3, 0.1};
  spec.platform.u0 = 1.0;
  spec.rewards = RewardFns{RewardFn::constant(), RewardFn::linear(0.1)};
  spec.seed = 42;
  return spec;
}

RunSpec explore_spec(std::uint64_t seed) {
  auto spec = reference_spec(AgentPolicyKind::AdaptiveDecreasing);
  spec.platform.kind = PlatformPolicyKind::ExplorePeriodically;
  spec.platform.delta = 18;
  spec.geometry.n = 20;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("a trace satisfies its structural invariants") {
  const auto spec = reference_spec(AgentPolicyKind::AdaptiveDecreasing);
  const auto trace = run(spec);
  const auto p = validate_params(spec.alpha, spec.beta);
  REQUIRE(trace.horizon() == 80);
  REQUIRE(trace.blocks.size() == 10);
  CHECK(trace.steps.front().x == -1.0);
  for (long long k = 0; k < trace.horizon(); ++k) {
    const auto& r = trace.steps[k];
    CHECK(r.k == k);
    CHECK(trace.opinion_at(k + 1) == step(p, -1.0, r.x, r.u, r.clicked));
    const double d = std::abs(r.x - r.u);
    CHECK(r.agent_reward == (r.clicked ? 1.0 : 0.0));
    CHECK(r.platform_reward == (r.clicked ? std::max(0.0, 1.0 - 0.1 * d) : 0.0));
  }
}

TEST_CASE("fixed points of the loop") {
  auto spec = reference_spec(AgentPolicyKind::Fixed);
  spec.x0 = 1.0;
  for (const auto& r : run(spec).steps) CHECK(r.x == 1.0);
  spec = reference_spec(AgentPolicyKind::Fixed);
  spec.agent.t0 = 0;
  const auto idle = run(spec);
  for (const auto& r : idle.steps) {
    CHECK(r.x == -1.0);
    CHECK(r.platform_reward == 0.0);
  }
}

TEST_CASE("block boundaries match the closed forms") {
  const auto p = validate_params(0.25, 0.2);
  const auto fixed = run(reference_spec(AgentPolicyKind::Fixed));
  const auto dec = run(reference_spec(AgentPolicyKind::Decreasing));
  const auto ada = run(reference_spec(AgentPolicyKind::AdaptiveDecreasing));
  const auto boundary = measure_adaptive_boundary(p, 8, 8, 3, 0.1, -1.0, 1.0, 10);
  REQUIRE(boundary.has_value());
  for (int i = 1; i <= 10; ++i) {
    const auto& fb = fixed.blocks[i - 1];
    CHECK(fb.i == i);
    CHECK(std::abs(fb.x_block - upsilon_fixed(p, 8, 8, i).opinion(-1.0, 1.0)) < 1e-9);
    CHECK(std::abs(dec.blocks[i - 1].x_block -
                   upsilon_decreasing(p, 8, 8, 2.0, i).opinion(-1.0, 1.0)) < 1e-9);
    CHECK(std::abs(ada.blocks[i - 1].x_block -
                   upsilon_adaptive(p, 8, 8, 3, i, *boundary).opinion(-1.0, 1.0)) < 1e-9);
    const AgentPolicyState initial(AgentPolicyConfig{AgentPolicyKind::AdaptiveDecreasing, 8, 2.0, 3, 0.1},
                                   BlockGeometry{8, 10});
    CHECK(ada.blocks[i - 1].x_block ==
          brute_force_block_opinion(p, initial, 1.0, -1.0, i, Precision::Double));
  }
  CHECK(dec.blocks[0].clicks == 4);
  CHECK(dec.blocks[3].clicks == 0);
}

TEST_CASE("fresh traces replay cleanly") {
  CHECK(replay_check(run(reference_spec(AgentPolicyKind::Decreasing))).ok);
  CHECK(replay_check(run(explore_spec(42))).ok);
}

TEST_CASE("a mutated opinion is located") {
  auto trace = run(reference_spec(AgentPolicyKind::Fixed));
  trace.steps[17].x = std::nextafter(trace.steps[17].x, 2.0);
  const auto r = replay_check(trace);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(*r.first_mismatch == 17);
}

TEST_CASE("a different seed diverges at the first exploration step") {
  auto trace = run(explore_spec(42));
  trace.meta.seed = 43;
  const auto r = replay_check(trace);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(*r.first_mismatch == 0);
}

TEST_CASE("structurally broken traces are rejected") {
  auto trace = run(reference_spec(AgentPolicyKind::Fixed));
  trace.steps.pop_back();
  CHECK_THROWS_AS(replay_check(trace), Error);
  auto gap = run(reference_spec(AgentPolicyKind::Fixed));
  gap.steps[5].k = 6;
  CHECK_THROWS_AS(replay_check(gap), Error);
}

TEST_CASE("exploitation is constant between exploration steps") {
  const auto trace = run(explore_spec(7));
  for (long long k = 1; k < trace.horizon(); ++k) {
    if (k % 18 == 0 || k % 18 == 1) continue;
    CHECK(trace.steps[k].u == trace.steps[k - 1].u);
  }
}

TEST_CASE("invalid runs are rejected before they start") {
  auto spec = reference_spec(AgentPolicyKind::Fixed);
  spec.alpha = 0.1;
  CHECK_THROWS_AS(run(spec), Error);
  spec = reference_spec(AgentPolicyKind::Fixed);
  spec.x0 = 1.2;
  CHECK_THROWS_AS(run(spec), Error);
}
