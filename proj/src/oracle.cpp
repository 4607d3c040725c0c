#include "reactsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "reactsim/error.hpp"

namespace reactsim {

namespace {

void require_block_index(int i) {
  if (i < 0) throw Error(ErrorKind::InvalidParams, "block index must be >= 0");
}

void require_clicks(int s, int t0) {
  if (s < 1) throw Error(ErrorKind::InvalidParams, "block length s must be >= 1");
  if (t0 < 0 || t0 > s) throw Error(ErrorKind::InvalidParams, "T0 must lie in [0, s]");
}

// Geometric part of the fixed-count weights after n blocks with T clicks:
// Upsilon = G * (1-eta) B^{s-T} (1-beta^T), Gamma = G * (1 - B^{s-T} + eta B^{s-T} (1-beta^T)) + r^n
// with r = B^s Z^T and G = (1 - r^n) / (1 - r).
struct FixedParts {
  double upsilon;
  double gamma;
  double ratio_pow;  // r^n
};

FixedParts fixed_parts(const DynamicsParams& p, int s, int t, int n) {
  const double r = std::pow(p.b(), s) * std::pow(p.z(), t);
  if (r == 1.0) {
    throw Error(ErrorKind::DegenerateDenominator, "B^s Z^T0 equals 1");
  }
  const double rn = std::pow(r, n);
  const double geo = (1.0 - rn) / (1.0 - r);
  const double tail = std::pow(p.b(), s - t);
  const double click_mass = 1.0 - std::pow(p.beta(), t);
  return FixedParts{geo * (1.0 - p.eta()) * tail * click_mass,
                    geo * (1.0 - tail + p.eta() * tail * click_mass) + rn, rn};
}

// Shared shape of the transient sums for both reactive policies. Term j
// carries the clicking count of block i-1-j and the cumulative clicks of
// the blocks after it.
template <typename ClicksOf, typename ZExponentOf>
BlockWeight transient_sum(const DynamicsParams& p, int s, int i, double total_clicks,
                          ClicksOf clicks_of, ZExponentOf z_exponent_of) {
  double ups = 0.0;
  double no_click_part = 0.0;
  double innate_click_part = 0.0;
  for (int j = 0; j < i; ++j) {
    const double c = clicks_of(j);
    const double zf = std::pow(p.z(), z_exponent_of(j));
    const double lead = std::pow(p.b(), (j + 1.0) * s - c) * zf * (1.0 - std::pow(p.beta(), c));
    ups += lead;
    innate_click_part += lead;
    no_click_part += std::pow(p.b(), static_cast<double>(j) * s) * (1.0 - std::pow(p.b(), s - c)) * zf;
  }
  BlockWeight w;
  w.upsilon = (1.0 - p.eta()) * ups;
  w.gamma = no_click_part + p.eta() * innate_click_part +
            std::pow(p.b(), static_cast<double>(i) * s) * std::pow(p.z(), total_clicks);
  w.block_index = i;
  w.phase = Phase::Transient;
  return w;
}

BlockWeight decreasing_transient(const DynamicsParams& p, int s, int t0, double kappa, int i) {
  const double lead = t0 * std::pow(kappa, 1.0 - i) / (kappa - 1.0);
  return transient_sum(
      p, s, i, lead * (std::pow(kappa, i) - 1.0),
      [&](int j) { return t0 / std::pow(kappa, i - j - 1.0); },
      [&](int j) { return lead * (std::pow(kappa, j) - 1.0); });
}

BlockWeight adaptive_transient(const DynamicsParams& p, int s, int t0, int tau, int i) {
  const double t = t0;
  const double dt = tau;
  return transient_sum(
      p, s, i, i * t + dt * (i - static_cast<double>(i) * i) / 2.0,
      [&](int j) { return t - (i - 1.0 - j) * dt; },
      [&](int j) { return j * (t - dt * i) + dt * (static_cast<double>(j) * j + j) / 2.0; });
}

}  // namespace

BlockWeight upsilon_fixed(const DynamicsParams& params, int s, int t0, int i) {
  require_clicks(s, t0);
  require_block_index(i);
  const auto parts = fixed_parts(params, s, t0, i);
  return BlockWeight{parts.gamma, parts.upsilon, Phase::Transient, i};
}

DecreasingSchedule decreasing_schedule(int t0, double kappa) {
  if (!(kappa > 1.0)) throw Error(ErrorKind::NotApplicable, "decreasing schedule needs kappa > 1");
  if (t0 < 1) throw Error(ErrorKind::NotApplicable, "decreasing schedule needs T0 >= 1");
  DecreasingSchedule out;
  out.exact = true;
  int clicks = t0;
  while (clicks > 0) {
    const double ideal = t0 / std::pow(kappa, out.m_d);
    if (std::abs(ideal - clicks) > 1e-9 * std::max(1.0, ideal)) out.exact = false;
    clicks = decreased_clicks(clicks, kappa);
    ++out.m_d;
  }
  return out;
}

BlockWeight upsilon_decreasing(const DynamicsParams& params, int s, int t0, double kappa, int i) {
  require_clicks(s, t0);
  require_block_index(i);
  if (!(kappa > 1.0)) throw Error(ErrorKind::NotApplicable, "decreasing closed form needs kappa > 1");
  if (t0 == 0) return BlockWeight{1.0, 0.0, Phase::SteadyState, i};
  const auto sched = decreasing_schedule(t0, kappa);
  if (!sched.exact) {
    throw Error(ErrorKind::InexactDivision,
                "T0 / kappa^j is not integral for every transient block; simulate instead");
  }
  if (i <= sched.m_d) return decreasing_transient(params, s, t0, kappa, i);
  const BlockWeight at_m = decreasing_transient(params, s, t0, kappa, sched.m_d);
  const double decay = std::pow(params.b(), static_cast<double>(i - sched.m_d) * s);
  return BlockWeight{(1.0 - decay) + decay * at_m.gamma, decay * at_m.upsilon, Phase::SteadyState, i};
}

BlockWeight upsilon_adaptive(const DynamicsParams& params, int s, int t0, int tau, int i, int m_ad) {
  const long long steady = static_cast<long long>(t0) - static_cast<long long>(m_ad - 1) * tau;
  if (m_ad < 1 || steady < 0) {
    throw Error(ErrorKind::InvalidBoundary,
                "m_AD=" + std::to_string(m_ad) + " gives a negative steady clicking count");
  }
  return upsilon_adaptive(params, s, t0, tau, i, AdaptiveBoundary{m_ad, static_cast<int>(steady)});
}

BlockWeight upsilon_adaptive(const DynamicsParams& params, int s, int t0, int tau, int i,
                             const AdaptiveBoundary& boundary) {
  require_clicks(s, t0);
  require_block_index(i);
  if (tau < 1) throw Error(ErrorKind::InvalidParams, "tau must be >= 1");
  const long long last_transient =
      static_cast<long long>(t0) - static_cast<long long>(boundary.m_ad - 1) * tau;
  if (boundary.m_ad < 1 || last_transient < 0 || boundary.steady_clicks < 0 ||
      boundary.steady_clicks > last_transient) {
    throw Error(ErrorKind::InvalidBoundary, "adaptive boundary inconsistent with T0 and tau");
  }
  if (i <= boundary.m_ad) return adaptive_transient(params, s, t0, tau, i);

  const BlockWeight at_m = adaptive_transient(params, s, t0, tau, boundary.m_ad);
  const auto steady = fixed_parts(params, s, boundary.steady_clicks, i - boundary.m_ad);
  return BlockWeight{(steady.gamma - steady.ratio_pow) + steady.ratio_pow * at_m.gamma,
                     steady.upsilon + steady.ratio_pow * at_m.upsilon, Phase::SteadyState, i};
}

std::optional<AdaptiveBoundary> adaptive_boundary_from_schedule(std::span<const int> clicks,
                                                                int t0, int tau) {
  if (clicks.empty() || clicks.front() != t0) return std::nullopt;
  int changes = 0;
  for (std::size_t j = 1; j < clicks.size(); ++j) {
    if (clicks[j] == clicks[j - 1]) continue;
    // Decreases must sit on boundaries 1..f with no gaps.
    if (static_cast<int>(j) != changes + 1) return std::nullopt;
    if (clicks[j] != std::max(0, t0 - static_cast<int>(j) * tau)) return std::nullopt;
    ++changes;
  }
  const long long remaining = static_cast<long long>(t0) - static_cast<long long>(changes) * tau;
  if (remaining >= 0) return AdaptiveBoundary{changes + 1, static_cast<int>(remaining)};
  return AdaptiveBoundary{changes, 0};
}

namespace {

template <typename Real>
Real brute_force(const DynamicsParams& p, AgentPolicyState state, double u0, double x0, int i,
                 std::vector<int>* schedule) {
  const Real a = p.alpha();
  const Real b = p.beta();
  const Real x_innate = x0;
  const Real u = u0;
  Real x = x_innate;
  const int s = state.geometry().s;
  for (int block = 0; block < i; ++block) {
    if (schedule) schedule->push_back(state.current_clicks());
    for (int j = 0; j < s; ++j) {
      if constexpr (std::is_same_v<Real, double>) {
        x = step(p, x0, x, u0, state.decide_click(j));
      } else {
        x = state.decide_click(j) ? a * x_innate + b * x + (Real(1) - a - b) * u
                                  : (a / (a + b)) * x_innate + (b / (a + b)) * x;
      }
    }
    state = state.end_of_block_update(static_cast<double>(x), x0);
  }
  return x;
}

}  // namespace

double brute_force_block_opinion(const DynamicsParams& params, const AgentPolicyState& initial,
                                 double u0, double x0, int i, Precision precision) {
  require_block_index(i);
  if (precision == Precision::Double) return brute_force<double>(params, initial, u0, x0, i, nullptr);
  return static_cast<double>(brute_force<long double>(params, initial, u0, x0, i, nullptr));
}

std::optional<AdaptiveBoundary> measure_adaptive_boundary(const DynamicsParams& params, int s,
                                                          int t0, int tau, double x_drift,
                                                          double x0, double u0, int blocks) {
  AgentPolicyConfig cfg{AgentPolicyKind::AdaptiveDecreasing, t0, 2.0, tau, x_drift};
  AgentPolicyState state(cfg, BlockGeometry{s, std::max(1, blocks)});
  std::vector<int> schedule;
  brute_force<long double>(params, state, u0, x0, blocks, &schedule);
  return adaptive_boundary_from_schedule(schedule, t0, tau);
}

Interval limit_opinion(AgentPolicyKind kind, const DynamicsParams& params, double x0, double u0,
                       double x_drift) {
  switch (kind) {
    case AgentPolicyKind::Fixed: {
      const double v = params.eta() * x0 + (1.0 - params.eta()) * u0;
      return Interval{v, v};
    }
    case AgentPolicyKind::Decreasing:
      return Interval{x0, x0};
    case AgentPolicyKind::AdaptiveDecreasing:
      if (x0 < u0) return Interval{x0, std::min(1.0, x0 + x_drift)};
      if (x0 > u0) return Interval{std::max(-1.0, x0 - x_drift), x0};
      return Interval{x0, x0};
  }
  return Interval{x0, x0};
}

Interval limit_agent_utility(AgentPolicyKind kind, const DynamicsParams& params, double x0,
                             double u0, double lambda) {
  switch (kind) {
    case AgentPolicyKind::Fixed: {
      const double v = lambda - (1.0 - lambda) * (1.0 - params.eta()) * std::abs(u0 - x0);
      return Interval{v, v};
    }
    case AgentPolicyKind::Decreasing:
      return Interval{0.0, 0.0};
    case AgentPolicyKind::AdaptiveDecreasing:
      return Interval{0.0, lambda};
  }
  return Interval{0.0, 0.0};
}

EpsilonThreshold adaptive_beats_fixed_threshold(const DynamicsParams& params, int s,
                                                double lambda, double x0, double u0) {
  if (s < 1) throw Error(ErrorKind::InvalidParams, "block length s must be >= 1");
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw Error(ErrorKind::HypothesisViolated, "lambda must lie in [0,1)");
  }
  const double gap = std::abs(u0 - x0);
  if (gap == 0.0) throw Error(ErrorKind::HypothesisViolated, "x0 must differ from u0");
  const double drift_weight = (1.0 - lambda) * (1.0 - params.eta()) * gap;
  EpsilonThreshold out;
  out.fixed_limit_utility = lambda - drift_weight;
  if (out.fixed_limit_utility < 0.0) {
    throw Error(ErrorKind::HypothesisViolated, "fixed-policy limit utility is negative");
  }
  const double beta_pow = std::pow(params.beta(), s - 1);
  out.epsilon1 = params.b() * (1.0 - beta_pow) / (1.0 - params.b() * beta_pow);
  out.threshold = 1.0 - (lambda / s) / drift_weight;
  out.strict_improvement_possible = out.epsilon1 < out.threshold;
  out.skip_one_limit_utility = lambda - lambda / s - drift_weight * out.epsilon1;
  out.skip_one_drift = (1.0 - params.eta()) * gap * out.epsilon1;
  return out;
}

}  // namespace reactsim
