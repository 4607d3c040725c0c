#include "reactsim/payoffs.hpp"

#include <algorithm>
#include <cmath>

#include "reactsim/error.hpp"

namespace reactsim {

std::string_view to_string(RewardKind kind) noexcept {
  switch (kind) {
    case RewardKind::Constant: return "constant";
    case RewardKind::LinearDistance: return "linear";
  }
  return "unknown";
}

double RewardFn::operator()(double distance) const noexcept {
  switch (kind) {
    case RewardKind::Constant:
      return 1.0;
    case RewardKind::LinearDistance:
      // Clamped at 0, which only binds for c > 1/2.
      return std::max(0.0, 1.0 - c * distance);
  }
  return 0.0;
}

void validate_reward(const RewardFn& fn) {
  if (fn.kind == RewardKind::LinearDistance && !(fn.c >= 0.0 && fn.c <= 1.0)) {
    throw Error(ErrorKind::InvalidParams, "reward slope c must lie in [0,1]");
  }
}

void validate_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::InvalidParams, "lambda must lie in [0,1]");
  }
}

namespace {

void require_steps(const OpinionTrace& trace) {
  if (trace.steps.empty()) throw Error(ErrorKind::EmptyTrace, "trace has no steps");
}

double reward_sum(const OpinionTrace& trace, const RewardFn& reward) {
  double sum = 0.0;
  for (const auto& st : trace.steps) {
    if (st.clicked) sum += reward(std::abs(st.x - st.u));
  }
  return sum;
}

}  // namespace

double agent_utility(const OpinionTrace& trace, const RewardFn& reward, double lambda) {
  require_steps(trace);
  const auto k = static_cast<double>(trace.horizon());
  return lambda * reward_sum(trace, reward) / k -
         (1.0 - lambda) * std::abs(trace.final_x - trace.x0());
}

double platform_payoff(const OpinionTrace& trace, const RewardFn& reward) {
  require_steps(trace);
  return reward_sum(trace, reward) / static_cast<double>(trace.horizon());
}

std::vector<UtilityPoint> utility_series(const OpinionTrace& trace, const RewardFns& rewards,
                                         double lambda) {
  require_steps(trace);
  std::vector<UtilityPoint> out;
  out.reserve(trace.steps.size());
  double agent_sum = 0.0;
  double platform_sum = 0.0;
  for (std::size_t idx = 0; idx < trace.steps.size(); ++idx) {
    const auto& st = trace.steps[idx];
    if (st.clicked) {
      const double d = std::abs(st.x - st.u);
      agent_sum += rewards.agent(d);
      platform_sum += rewards.platform(d);
    }
    const auto k = static_cast<long long>(idx + 1);
    const double x_k = trace.opinion_at(k);
    const double kd = static_cast<double>(k);
    out.push_back(UtilityPoint{k,
                               lambda * agent_sum / kd - (1.0 - lambda) * std::abs(x_k - trace.x0()),
                               platform_sum / kd});
  }
  return out;
}

}  // namespace reactsim
