#pragma once

#include <string>
#include <string_view>

namespace reactsim {

/// Time is split into n blocks of s steps; the horizon is K = n * s.
struct BlockGeometry {
  int s = 1;
  int n = 1;

  long long horizon() const noexcept { return static_cast<long long>(s) * n; }
};

/// Throws Error(InvalidParams) unless s >= 1 and n >= 1.
BlockGeometry validate_geometry(int s, int n);

enum class AgentPolicyKind { Fixed, Decreasing, AdaptiveDecreasing };

std::string_view to_string(AgentPolicyKind kind) noexcept;
/// Accepts "fixed", "decreasing", "adaptive". Throws Error(InvalidConfig).
AgentPolicyKind parse_agent_policy_kind(std::string_view name);

/// Constants of the clicking policy. kappa is read only by Decreasing,
/// tau and x_drift only by AdaptiveDecreasing.
struct AgentPolicyConfig {
  AgentPolicyKind kind = AgentPolicyKind::Fixed;
  int t0 = 0;
  double kappa = 2.0;
  int tau = 1;
  double x_drift = 0.1;
};

/// Clicking state machine: the agent clicks during the first T_i steps of
/// block i and abstains for the remaining s - T_i steps.
class AgentPolicyState {
 public:
  /// Validates the policy constants against the geometry.
  AgentPolicyState(const AgentPolicyConfig& config, const BlockGeometry& geometry);

  bool decide_click(int step_in_block) const;

  /// Applies the between-block rule after block i completes. x_block_end is
  /// the opinion at time (i+1)*s.
  AgentPolicyState end_of_block_update(double x_block_end, double x0) const;

  int current_block() const noexcept { return block_; }
  int current_clicks() const noexcept { return clicks_; }
  const AgentPolicyConfig& config() const noexcept { return config_; }
  const BlockGeometry& geometry() const noexcept { return geometry_; }

 private:
  AgentPolicyConfig config_;
  BlockGeometry geometry_;
  int block_ = 0;
  int clicks_ = 0;
};

/// max(0, floor(clicks / kappa))
int decreased_clicks(int clicks, double kappa);

/// Smallest block index m_D with T = 0 under the decreasing policy, found by
/// repeated floor division. Throws Error(NotApplicable) for other kinds,
/// kappa <= 1 or T0 = 0.
int first_zero_block(const AgentPolicyState& state);

}  // namespace reactsim
