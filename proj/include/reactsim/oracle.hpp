#pragma once

#include <optional>
#include <span>

#include "reactsim/agent_policy.hpp"
#include "reactsim/dynamics.hpp"

namespace reactsim {

enum class Phase { Transient, SteadyState };

/// Block-boundary opinion as a convex combination:
///   x_{i*s} = gamma * x0 + upsilon * u0.
/// gamma and upsilon are evaluated from separate closed forms, so their sum
/// being 1 is a genuine check.
struct BlockWeight {
  double gamma = 1.0;
  double upsilon = 0.0;
  Phase phase = Phase::Transient;
  int block_index = 0;

  double opinion(double x0, double u0) const noexcept { return gamma * x0 + upsilon * u0; }
};

struct PhaseBoundaries {
  std::optional<int> m_d;
  std::optional<int> m_ad;
};

/// Fixed clicking count T0 in every block.
/// Throws Error(DegenerateDenominator) if B^s Z^T0 == 1.
BlockWeight upsilon_fixed(const DynamicsParams& params, int s, int t0, int i);

/// Clicking count of the decreasing policy and whether the closed form is
/// exact for it (T0 / kappa^j integral for every j < m_D).
struct DecreasingSchedule {
  int m_d = 0;
  bool exact = false;
};

/// Throws Error(NotApplicable) unless kappa > 1 and t0 >= 1.
DecreasingSchedule decreasing_schedule(int t0, double kappa);

/// Transient blocks i <= m_D use the double-sum form, later blocks decay
/// geometrically from block m_D. Throws Error(InexactDivision) when the
/// schedule is not exact and Error(NotApplicable) for kappa <= 1.
/// T0 = 0 yields the zero weight for every block.
BlockWeight upsilon_decreasing(const DynamicsParams& params, int s, int t0, double kappa, int i);

/// Split point of the adaptive policy. Blocks j < m_ad click T0 - j*tau
/// times; blocks j >= m_ad click steady_clicks times.
struct AdaptiveBoundary {
  int m_ad = 1;
  int steady_clicks = 0;
};

/// Uses the unfloored convention steady_clicks = T0 - (m_ad - 1)*tau.
/// Throws Error(InvalidBoundary) if that count is negative or m_ad < 1.
BlockWeight upsilon_adaptive(const DynamicsParams& params, int s, int t0, int tau, int i,
                             int m_ad);
/// Throws Error(InvalidBoundary) unless m_ad >= 1, T0 - (m_ad-1)*tau >= 0
/// and 0 <= steady_clicks <= T0 - (m_ad-1)*tau.
BlockWeight upsilon_adaptive(const DynamicsParams& params, int s, int t0, int tau, int i,
                             const AdaptiveBoundary& boundary);

/// Reads the boundary off a per-block clicking schedule (clicks[j] = T_j).
/// Returns nullopt when the decreases do not happen on a consecutive prefix
/// of block boundaries, which the closed form cannot describe.
std::optional<AdaptiveBoundary> adaptive_boundary_from_schedule(std::span<const int> clicks,
                                                                int t0, int tau);

/// Simulates `blocks` blocks under a fixed recommendation and reads the
/// boundary off the resulting schedule.
std::optional<AdaptiveBoundary> measure_adaptive_boundary(const DynamicsParams& params, int s,
                                                          int t0, int tau, double x_drift,
                                                          double x0, double u0, int blocks);

enum class Precision { Double, Extended };

/// Opinion at time i*s from literal step-by-step recursion under a fixed
/// recommendation u0. Extended precision accumulates in long double; Double
/// reproduces the simulation engine bit-for-bit.
double brute_force_block_opinion(const DynamicsParams& params, const AgentPolicyState& initial,
                                 double u0, double x0, int i,
                                 Precision precision = Precision::Extended);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool is_point() const noexcept { return lo == hi; }
  bool contains(double v, double slack = 0.0) const noexcept {
    return v >= lo - slack && v <= hi + slack;
  }
};

/// Infinite-horizon opinion with T0 = s: a point for Fixed and Decreasing,
/// the interval between x0 and x0 +/- x_drift (clipped to [-1,1]) for
/// AdaptiveDecreasing.
Interval limit_opinion(AgentPolicyKind kind, const DynamicsParams& params, double x0, double u0,
                       double x_drift);

/// Infinite-horizon agent utility with R^A = 1 and T0 = s. Adaptive yields
/// the bounds [0, lambda].
Interval limit_agent_utility(AgentPolicyKind kind, const DynamicsParams& params, double x0,
                             double u0, double lambda);

struct EpsilonThreshold {
  double epsilon1 = 0.0;
  /// Right-hand side 1 - (lambda/s) / ((1-lambda)(1-eta)|u0-x0|).
  double threshold = 0.0;
  bool strict_improvement_possible = false;
  double fixed_limit_utility = 0.0;
  /// Limit utility of the schedule that skips one click per block.
  double skip_one_limit_utility = 0.0;
  /// Drift tolerance (1-eta)|u0-x0| * epsilon1 at which that schedule settles.
  double skip_one_drift = 0.0;
};

/// Throws Error(HypothesisViolated) when the fixed-policy limit utility is
/// negative, lambda >= 1 or x0 == u0.
EpsilonThreshold adaptive_beats_fixed_threshold(const DynamicsParams& params, int s,
                                                double lambda, double x0, double u0);

}  // namespace reactsim
