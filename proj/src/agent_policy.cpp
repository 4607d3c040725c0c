#include "reactsim/agent_policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "reactsim/error.hpp"

namespace reactsim {

BlockGeometry validate_geometry(int s, int n) {
  if (s < 1) throw Error(ErrorKind::InvalidParams, "block length s must be >= 1");
  if (n < 1) throw Error(ErrorKind::InvalidParams, "block count n must be >= 1");
  return BlockGeometry{s, n};
}

std::string_view to_string(AgentPolicyKind kind) noexcept {
  switch (kind) {
    case AgentPolicyKind::Fixed: return "fixed";
    case AgentPolicyKind::Decreasing: return "decreasing";
    case AgentPolicyKind::AdaptiveDecreasing: return "adaptive";
  }
  return "unknown";
}

AgentPolicyKind parse_agent_policy_kind(std::string_view name) {
  if (name == "fixed") return AgentPolicyKind::Fixed;
  if (name == "decreasing") return AgentPolicyKind::Decreasing;
  if (name == "adaptive") return AgentPolicyKind::AdaptiveDecreasing;
  throw Error(ErrorKind::InvalidConfig, "unknown agent policy '" + std::string(name) + "'");
}

AgentPolicyState::AgentPolicyState(const AgentPolicyConfig& config,
                                   const BlockGeometry& geometry)
    : config_(config), geometry_(validate_geometry(geometry.s, geometry.n)) {
  if (config.t0 < 0 || config.t0 > geometry.s) {
    throw Error(ErrorKind::InvalidParams, "T0 must lie in [0, s]");
  }
  if (config.kind == AgentPolicyKind::Decreasing &&
      !(std::isfinite(config.kappa) && config.kappa >= 1.0)) {
    throw Error(ErrorKind::InvalidParams, "kappa must be >= 1");
  }
  if (config.kind == AgentPolicyKind::AdaptiveDecreasing) {
    if (config.tau < 1) throw Error(ErrorKind::InvalidParams, "tau must be >= 1");
    if (!(std::isfinite(config.x_drift) && config.x_drift > 0.0)) {
      throw Error(ErrorKind::InvalidParams, "x_drift must be > 0");
    }
  }
  clicks_ = config.t0;
}

bool AgentPolicyState::decide_click(int step_in_block) const {
  return step_in_block < clicks_;
}

int decreased_clicks(int clicks, double kappa) {
  return std::max(0, static_cast<int>(std::floor(clicks / kappa)));
}

AgentPolicyState AgentPolicyState::end_of_block_update(double x_block_end, double x0) const {
  AgentPolicyState next = *this;
  switch (config_.kind) {
    case AgentPolicyKind::Fixed:
      break;
    case AgentPolicyKind::Decreasing:
      next.clicks_ = decreased_clicks(clicks_, config_.kappa);
      break;
    case AgentPolicyKind::AdaptiveDecreasing:
      // Equality fires the trigger.
      if (std::abs(x_block_end - x0) >= config_.x_drift) {
        next.clicks_ = std::max(0, clicks_ - config_.tau);
      }
      break;
  }
  ++next.block_;
  return next;
}

int first_zero_block(const AgentPolicyState& state) {
  const auto& cfg = state.config();
  if (cfg.kind != AgentPolicyKind::Decreasing) {
    throw Error(ErrorKind::NotApplicable, "first_zero_block needs the decreasing policy");
  }
  if (!(cfg.kappa > 1.0)) throw Error(ErrorKind::NotApplicable, "kappa must exceed 1");
  if (cfg.t0 < 1) throw Error(ErrorKind::NotApplicable, "T0 must be >= 1");
  int clicks = cfg.t0;
  int block = 0;
  while (clicks > 0) {
    clicks = decreased_clicks(clicks, cfg.kappa);
    ++block;
  }
  return block;
}

}  // namespace reactsim
