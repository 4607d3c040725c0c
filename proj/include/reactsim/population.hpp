#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reactsim/engine.hpp"
#include "reactsim/random.hpp"

namespace reactsim {

/// Counts over uniform bins on [lo, hi]. The last bin is closed on the right.
struct Histogram {
  double lo = -1.0;
  double hi = 1.0;
  std::vector<long long> counts;

  static Histogram uniform(int bins, double lo = -1.0, double hi = 1.0);
  int bins() const noexcept { return static_cast<int>(counts.size()); }
  double bin_width() const noexcept { return (hi - lo) / bins(); }
  double bin_left(int b) const noexcept { return lo + b * bin_width(); }
  double bin_right(int b) const noexcept { return b + 1 == bins() ? hi : lo + (b + 1) * bin_width(); }
  long long total() const noexcept;
  void add(double v);
};

Histogram make_histogram(std::span<const double> values, int bins = 40, double lo = -1.0,
                         double hi = 1.0);

/// First-order Wasserstein distance between two normalised histograms, with
/// each bin's mass at its centre. Throws Error(BinningMismatch) unless both
/// use the same bins, Error(InvalidParams) if either is empty.
double distribution_distance(const Histogram& a, const Histogram& b);

/// Exact first-order Wasserstein distance between two empirical samples.
double wasserstein_samples(std::vector<double> a, std::vector<double> b);

struct PopulationSpec {
  int count = 2000;
  Distribution innate = Distribution::uniform();
  Distribution recommendation = Distribution::gaussian(0.0, 0.5);
  /// Shared scenario; x0 and the platform's u0 are replaced per agent.
  RunSpec scenario;
  /// One population pass per entry, all on the same sampled agents.
  std::vector<AgentPolicyConfig> policies;
  std::uint64_t base_seed = 0;
  int bins = 40;
};

/// Throws Error(InvalidParams) for count < 1, bins < 1, an invalid
/// distribution or an invalid scenario for any policy.
void validate_population(const PopulationSpec& spec);

struct PolicyOutcome {
  AgentPolicyConfig agent;
  std::vector<double> final_opinions;
  Histogram final_hist;
  double distance_to_innate = 0.0;
  double distance_to_recommendation = 0.0;
};

struct PopulationResult {
  std::vector<double> innate;
  std::vector<double> recommendation;
  Histogram innate_hist;
  Histogram recommendation_hist;
  std::vector<PolicyOutcome> outcomes;
};

/// Agent j draws (x0, u0) from an Rng seeded with base_seed + j and runs
/// with that same seed under a fixed recommendation.
PopulationResult run_population(const PopulationSpec& spec, int jobs = 0);

enum class SweepParameter { Alpha, Beta, Lambda, X0, U0, T0, Kappa, Tau, XDrift, C };

std::string_view to_string(SweepParameter p) noexcept;
/// Accepts alpha, beta, lambda, x0, u0, t0, kappa, tau, x_drift, c.
/// Throws Error(InvalidConfig).
SweepParameter parse_sweep_parameter(std::string_view name);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::Alpha;
  std::vector<double> values;
  RunSpec scenario;
  double lambda = 0.5;
  std::vector<AgentPolicyConfig> policies;
};

struct SweepRow {
  double value = 0.0;
  AgentPolicyKind policy = AgentPolicyKind::Fixed;
  double final_opinion = 0.0;
  double final_drift = 0.0;
  double final_agent_utility = 0.0;
  double final_platform_utility = 0.0;
};

/// Cell (value, policy) with the parameter applied. t0, kappa, tau and
/// x_drift act on the policy; c on both reward functions; u0 on the
/// platform.
RunSpec sweep_cell(const SweepSpec& spec, std::size_t value_index, std::size_t policy_index,
                   double* lambda_out = nullptr);

/// Throws Error(InvalidParams) before any run if any cell is invalid.
void validate_sweep(const SweepSpec& spec);

/// Rows ordered by value, then by policy. Every cell reuses scenario.seed.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs = 0);

}  // namespace reactsim
