#pragma once

#include <cstdint>
#include <vector>

#include "reactsim/agent_policy.hpp"
#include "reactsim/payoffs_fwd.hpp"
#include "reactsim/platform_policy.hpp"

namespace reactsim {

/// Everything needed to re-execute a run bit-for-bit.
struct TraceMetadata {
  double alpha = 0.0;
  double beta = 0.0;
  double x0 = 0.0;
  BlockGeometry geometry;
  AgentPolicyConfig agent;
  PlatformPolicyConfig platform;
  RewardFns rewards;
  std::uint64_t seed = 0;
};

struct StepRecord {
  long long k = 0;
  double x = 0.0;
  double u = 0.0;
  bool clicked = false;
  double agent_reward = 0.0;
  double platform_reward = 0.0;
};

/// Opinion at the start of block i together with the clicking count the
/// agent will use in that block.
struct BlockBoundary {
  int i = 0;
  double x_block = 0.0;
  int clicks = 0;
};

/// Full history of one run. steps[k] describes step k = 0..K-1 and
/// final_x is x_K.
struct OpinionTrace {
  TraceMetadata meta;
  std::vector<StepRecord> steps;
  std::vector<BlockBoundary> blocks;
  double final_x = 0.0;

  long long horizon() const noexcept { return static_cast<long long>(steps.size()); }
  double x0() const noexcept { return meta.x0; }
  /// x_k for k in [0, K].
  double opinion_at(long long k) const { return k == horizon() ? final_x : steps.at(k).x; }
};

}  // namespace reactsim
