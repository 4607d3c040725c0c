#pragma once

#include <cstdint>
#include <optional>

#include "reactsim/agent_policy.hpp"
#include "reactsim/dynamics.hpp"
#include "reactsim/platform_policy.hpp"
#include "reactsim/trace.hpp"

namespace reactsim {

struct RunSpec {
  double alpha = 0.25;
  double beta = 0.2;
  double x0 = 0.0;
  BlockGeometry geometry;
  AgentPolicyConfig agent;
  PlatformPolicyConfig platform;
  RewardFns rewards;
  std::uint64_t seed = 0;
};

RunSpec spec_from_metadata(const TraceMetadata& meta);

/// Throws Error(InvalidParams) naming the first invalid field.
void validate_run_spec(const RunSpec& spec);

/// Runs the closed loop for K = n*s steps. Within step k the platform
/// recommends u_k, the agent decides clk_k, rewards are evaluated at
/// (x_k, u_k), x_{k+1} is computed and the platform observes the outcome.
/// Throws Error(InvalidParams) for any invalid input.
OpinionTrace run(const RunSpec& spec);

struct ReplayResult {
  bool ok = true;
  /// First step whose record differs, or the horizon K when only x_K or a
  /// block record differs.
  std::optional<long long> first_mismatch;
};

/// Re-executes the run described by trace.meta and compares every record
/// bitwise. Throws Error(CorruptTrace) if the trace is structurally broken
/// (wrong length, non-contiguous k, invalid metadata).
ReplayResult replay_check(const OpinionTrace& trace);

}  // namespace reactsim
