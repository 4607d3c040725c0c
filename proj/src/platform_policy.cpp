#include "reactsim/platform_policy.hpp"

#include "reactsim/dynamics.hpp"
#include "reactsim/error.hpp"

namespace reactsim {

std::string_view to_string(PlatformPolicyKind kind) noexcept {
  switch (kind) {
    case PlatformPolicyKind::FixedRecommendation: return "fixed";
    case PlatformPolicyKind::ExplorePeriodically: return "explore";
  }
  return "unknown";
}

void validate_platform_config(const PlatformPolicyConfig& config) {
  switch (config.kind) {
    case PlatformPolicyKind::FixedRecommendation:
      if (!in_opinion_range(config.u0)) throw Error(ErrorKind::InvalidParams, "u0 must lie in [-1,1]");
      break;
    case PlatformPolicyKind::ExplorePeriodically:
      if (config.delta < 1) throw Error(ErrorKind::InvalidParams, "delta must be >= 1");
      validate_distribution(config.explore);
      break;
  }
}

PlatformPolicyState::PlatformPolicyState(const PlatformPolicyConfig& config, std::uint64_t seed)
    : config_(config), rng_(seed) {
  validate_platform_config(config);
}

bool PlatformPolicyState::is_exploration_step(long long k) const noexcept {
  return config_.kind == PlatformPolicyKind::ExplorePeriodically && k % config_.delta == 0;
}

double PlatformPolicyState::recommend(long long k) {
  if (k == cached_k_) return cached_u_;
  double u;
  if (config_.kind == PlatformPolicyKind::FixedRecommendation) {
    u = config_.u0;
  } else if (is_exploration_step(k)) {
    u = config_.explore.sample(rng_);
  } else if (best_) {
    u = best_->u;
  } else {
    // Only reachable if observe_outcome was skipped; exploit the earliest u.
    u = history_.empty() ? config_.explore.sample(rng_) : history_.front().u;
  }
  cached_k_ = k;
  cached_u_ = u;
  return u;
}

void PlatformPolicyState::observe_outcome(long long k, double u, bool clicked, double reward) {
  const double recorded = clicked ? reward : 0.0;
  history_.push_back(Observation{k, u, clicked, recorded});
  if (!best_ || recorded > best_->reward) best_ = BestRecord{recorded, u, k};
}

}  // namespace reactsim
