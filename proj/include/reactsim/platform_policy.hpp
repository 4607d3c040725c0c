#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "reactsim/random.hpp"

namespace reactsim {

enum class PlatformPolicyKind { FixedRecommendation, ExplorePeriodically };

std::string_view to_string(PlatformPolicyKind kind) noexcept;

struct PlatformPolicyConfig {
  PlatformPolicyKind kind = PlatformPolicyKind::FixedRecommendation;
  double u0 = 0.0;
  int delta = 1;
  Distribution explore = Distribution::uniform();
};

struct Observation {
  long long k = 0;
  double u = 0.0;
  bool clicked = false;
  double reward = 0.0;
};

struct BestRecord {
  double reward = 0.0;
  double u = 0.0;
  long long k = 0;
};

/// Recommendation source. ExplorePeriodically draws a fresh recommendation
/// at k = 0, delta, 2*delta, ... and otherwise replays the past
/// recommendation with the highest observed clk * R^P (earliest wins ties).
class PlatformPolicyState {
 public:
  PlatformPolicyState(const PlatformPolicyConfig& config, std::uint64_t seed);

  /// Idempotent for a given k; exploration draws happen once per step.
  double recommend(long long k);
  void observe_outcome(long long k, double u, bool clicked, double reward);

  bool is_exploration_step(long long k) const noexcept;
  const std::optional<BestRecord>& best() const noexcept { return best_; }
  const std::vector<Observation>& history() const noexcept { return history_; }
  const PlatformPolicyConfig& config() const noexcept { return config_; }

 private:
  PlatformPolicyConfig config_;
  Rng rng_;
  std::optional<BestRecord> best_;
  std::vector<Observation> history_;
  long long cached_k_ = -1;
  double cached_u_ = 0.0;
};

/// Throws Error(InvalidParams) on an out-of-range u0, delta < 1 or a bad
/// exploration distribution.
void validate_platform_config(const PlatformPolicyConfig& config);

}  // namespace reactsim
