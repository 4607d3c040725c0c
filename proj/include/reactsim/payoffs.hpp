#pragma once

#include <vector>

#include "reactsim/payoffs_fwd.hpp"
#include "reactsim/trace.hpp"

namespace reactsim {

/// Throws Error(InvalidParams) if c is outside [0, 1].
void validate_reward(const RewardFn& fn);
/// Throws Error(InvalidParams) if lambda is outside [0, 1].
void validate_lambda(double lambda);

/// lambda * mean(clk_i * R^A(|x_i - u_i|)) - (1 - lambda) * |x_K - x_0|.
/// Throws Error(EmptyTrace) when the trace has no steps.
double agent_utility(const OpinionTrace& trace, const RewardFn& reward, double lambda);

/// mean(clk_i * R^P(|x_i - u_i|)). Throws Error(EmptyTrace).
double platform_payoff(const OpinionTrace& trace, const RewardFn& reward);

struct UtilityPoint {
  long long k = 0;  // prefix length
  double agent = 0.0;
  double platform = 0.0;
};

/// Both utilities evaluated on every prefix of length k = 1..K, with x_k as
/// the terminal opinion of the prefix.
std::vector<UtilityPoint> utility_series(const OpinionTrace& trace, const RewardFns& rewards,
                                         double lambda);

}  // namespace reactsim
