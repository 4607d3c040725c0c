#pragma once

#include <string_view>

namespace reactsim {

enum class RewardKind { Constant, LinearDistance };

std::string_view to_string(RewardKind kind) noexcept;

/// Non-increasing reward of the opinion-content distance d in [0, 2].
/// Constant returns 1; LinearDistance returns max(0, 1 - c*d).
struct RewardFn {
  RewardKind kind = RewardKind::Constant;
  double c = 0.0;

  double operator()(double distance) const noexcept;

  static RewardFn constant() { return RewardFn{RewardKind::Constant, 0.0}; }
  static RewardFn linear(double c) { return RewardFn{RewardKind::LinearDistance, c}; }
};

struct RewardFns {
  RewardFn agent;
  RewardFn platform;
};

}  // namespace reactsim
