#include "reactsim/population.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "reactsim/error.hpp"
#include "reactsim/parallel.hpp"
#include "reactsim/payoffs.hpp"

namespace reactsim {

Histogram Histogram::uniform(int bins, double lo, double hi) {
  if (bins < 1) throw Error(ErrorKind::InvalidParams, "histogram needs at least one bin");
  if (!(lo < hi)) throw Error(ErrorKind::InvalidParams, "histogram range is empty");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  return h;
}

long long Histogram::total() const noexcept {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

void Histogram::add(double v) {
  if (!(v >= lo && v <= hi)) {
    throw Error(ErrorKind::InvalidParams, "value " + std::to_string(v) + " outside histogram range");
  }
  const int b = std::min(bins() - 1, static_cast<int>(std::floor((v - lo) / bin_width())));
  ++counts[static_cast<std::size_t>(b)];
}

Histogram make_histogram(std::span<const double> values, int bins, double lo, double hi) {
  Histogram h = Histogram::uniform(bins, lo, hi);
  for (double v : values) h.add(v);
  return h;
}

double distribution_distance(const Histogram& a, const Histogram& b) {
  if (a.bins() != b.bins() || a.lo != b.lo || a.hi != b.hi) {
    throw Error(ErrorKind::BinningMismatch, "histograms use different binning");
  }
  const double ta = static_cast<double>(a.total());
  const double tb = static_cast<double>(b.total());
  if (ta == 0.0 || tb == 0.0) throw Error(ErrorKind::InvalidParams, "histogram is empty");
  double fa = 0.0, fb = 0.0, w = 0.0;
  for (int k = 0; k + 1 < a.bins(); ++k) {
    fa += a.counts[k] / ta;
    fb += b.counts[k] / tb;
    w += std::abs(fa - fb);
  }
  return w * a.bin_width();
}

double wasserstein_samples(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::InvalidParams, "sample is empty");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double x = std::min(a.front(), b.front());
  double w = 0.0;
  while (ia < a.size() || ib < b.size()) {
    const double next = ib == b.size() || (ia < a.size() && a[ia] <= b[ib]) ? a[ia] : b[ib];
    w += std::abs(ia / na - ib / nb) * (next - x);
    x = next;
    while (ia < a.size() && a[ia] == x) ++ia;
    while (ib < b.size() && b[ib] == x) ++ib;
  }
  return w;
}

namespace {

RunSpec agent_spec(const PopulationSpec& spec, const AgentPolicyConfig& policy, double x0, double u0,
                   std::uint64_t seed) {
  RunSpec r = spec.scenario;
  r.x0 = x0;
  r.platform.kind = PlatformPolicyKind::FixedRecommendation;
  r.platform.u0 = u0;
  r.agent = policy;
  r.seed = seed;
  return r;
}

}  // namespace

void validate_population(const PopulationSpec& spec) {
  if (spec.count < 1) throw Error(ErrorKind::InvalidParams, "population count must be >= 1");
  if (spec.bins < 1) throw Error(ErrorKind::InvalidParams, "histogram bins must be >= 1");
  if (spec.policies.empty()) throw Error(ErrorKind::InvalidParams, "population needs at least one policy");
  validate_distribution(spec.innate);
  validate_distribution(spec.recommendation);
  for (const auto& p : spec.policies) validate_run_spec(agent_spec(spec, p, 0.0, 0.0, spec.base_seed));
}

PopulationResult run_population(const PopulationSpec& spec, int jobs) {
  validate_population(spec);
  const auto n = static_cast<std::size_t>(spec.count);
  PopulationResult out;
  out.innate.resize(n);
  out.recommendation.resize(n);
  std::vector<std::vector<double>> finals(spec.policies.size(), std::vector<double>(n));

  parallel_for(n, jobs, [&](std::size_t j) {
    const std::uint64_t seed = spec.base_seed + j;
    Rng rng(seed);
    const double x0 = spec.innate.sample(rng);
    const double u0 = spec.recommendation.sample(rng);
    out.innate[j] = x0;
    out.recommendation[j] = u0;
    for (std::size_t p = 0; p < spec.policies.size(); ++p) {
      finals[p][j] = run(agent_spec(spec, spec.policies[p], x0, u0, seed)).final_x;
    }
  });

  out.innate_hist = make_histogram(out.innate, spec.bins);
  out.recommendation_hist = make_histogram(out.recommendation, spec.bins);
  for (std::size_t p = 0; p < spec.policies.size(); ++p) {
    PolicyOutcome o;
    o.agent = spec.policies[p];
    o.final_opinions = std::move(finals[p]);
    o.final_hist = make_histogram(o.final_opinions, spec.bins);
    o.distance_to_innate = distribution_distance(o.final_hist, out.innate_hist);
    o.distance_to_recommendation = distribution_distance(o.final_hist, out.recommendation_hist);
    out.outcomes.push_back(std::move(o));
  }
  return out;
}

std::string_view to_string(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::Alpha: return "alpha";
    case SweepParameter::Beta: return "beta";
    case SweepParameter::Lambda: return "lambda";
    case SweepParameter::X0: return "x0";
    case SweepParameter::U0: return "u0";
    case SweepParameter::T0: return "t0";
    case SweepParameter::Kappa: return "kappa";
    case SweepParameter::Tau: return "tau";
    case SweepParameter::XDrift: return "x_drift";
    case SweepParameter::C: return "c";
  }
  return "unknown";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  for (auto p : {SweepParameter::Alpha, SweepParameter::Beta, SweepParameter::Lambda, SweepParameter::X0,
                 SweepParameter::U0, SweepParameter::T0, SweepParameter::Kappa, SweepParameter::Tau,
                 SweepParameter::XDrift, SweepParameter::C}) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown sweep parameter '" + std::string(name) + "'");
}

namespace {

int as_count(double v, SweepParameter p) {
  if (std::floor(v) != v || std::abs(v) > 1e9) {
    throw Error(ErrorKind::InvalidParams,
                std::string(to_string(p)) + " sweep value " + std::to_string(v) + " is not an integer");
  }
  return static_cast<int>(v);
}

}  // namespace

RunSpec sweep_cell(const SweepSpec& spec, std::size_t value_index, std::size_t policy_index,
                   double* lambda_out) {
  RunSpec r = spec.scenario;
  r.agent = spec.policies.at(policy_index);
  double lambda = spec.lambda;
  const double v = spec.values.at(value_index);
  switch (spec.parameter) {
    case SweepParameter::Alpha: r.alpha = v; break;
    case SweepParameter::Beta: r.beta = v; break;
    case SweepParameter::Lambda: lambda = v; break;
    case SweepParameter::X0: r.x0 = v; break;
    case SweepParameter::U0: r.platform.u0 = v; break;
    case SweepParameter::T0: r.agent.t0 = as_count(v, spec.parameter); break;
    case SweepParameter::Kappa: r.agent.kappa = v; break;
    case SweepParameter::Tau: r.agent.tau = as_count(v, spec.parameter); break;
    case SweepParameter::XDrift: r.agent.x_drift = v; break;
    case SweepParameter::C:
      for (RewardFn* fn : {&r.rewards.agent, &r.rewards.platform}) {
        if (fn->kind == RewardKind::LinearDistance) fn->c = v;
      }
      break;
  }
  if (lambda_out) *lambda_out = lambda;
  return r;
}

void validate_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw Error(ErrorKind::InvalidParams, "sweep grid is empty");
  if (spec.policies.empty()) throw Error(ErrorKind::InvalidParams, "sweep needs at least one policy");
  for (std::size_t v = 0; v < spec.values.size(); ++v) {
    for (std::size_t p = 0; p < spec.policies.size(); ++p) {
      double lambda = 0.0;
      try {
        validate_run_spec(sweep_cell(spec, v, p, &lambda));
        validate_lambda(lambda);
      } catch (const Error& e) {
        throw Error(e.kind(), std::string(to_string(spec.parameter)) + "=" + std::to_string(spec.values[v]) +
                                  ": " + e.what());
      }
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
  validate_sweep(spec);
  const std::size_t np = spec.policies.size();
  std::vector<SweepRow> rows(spec.values.size() * np);
  parallel_for(rows.size(), jobs, [&](std::size_t idx) {
    const std::size_t v = idx / np;
    const std::size_t p = idx % np;
    double lambda = 0.0;
    const RunSpec cell = sweep_cell(spec, v, p, &lambda);
    const OpinionTrace trace = run(cell);
    SweepRow& row = rows[idx];
    row.value = spec.values[v];
    row.policy = cell.agent.kind;
    row.final_opinion = trace.final_x;
    row.final_drift = std::abs(trace.final_x - cell.x0);
    row.final_agent_utility = agent_utility(trace, cell.rewards.agent, lambda);
    row.final_platform_utility = platform_payoff(trace, cell.rewards.platform);
  });
  return rows;
}

}  // namespace reactsim
