#include "reactsim/engine.hpp"

#include <cmath>
#include <cstring>

#include "reactsim/error.hpp"
#include "reactsim/payoffs.hpp"

namespace reactsim {

RunSpec spec_from_metadata(const TraceMetadata& meta) {
  return RunSpec{meta.alpha, meta.beta, meta.x0, meta.geometry,
                 meta.agent, meta.platform, meta.rewards, meta.seed};
}

void validate_run_spec(const RunSpec& spec) {
  validate_params(spec.alpha, spec.beta);
  if (!in_opinion_range(spec.x0)) throw Error(ErrorKind::InvalidParams, "x0 must lie in [-1,1]");
  validate_geometry(spec.geometry.s, spec.geometry.n);
  validate_reward(spec.rewards.agent);
  validate_reward(spec.rewards.platform);
  AgentPolicyState(spec.agent, spec.geometry);
  validate_platform_config(spec.platform);
}

OpinionTrace run(const RunSpec& spec) {
  validate_run_spec(spec);
  const DynamicsParams params = validate_params(spec.alpha, spec.beta);
  AgentPolicyState agent(spec.agent, spec.geometry);
  PlatformPolicyState platform(spec.platform, spec.seed);

  OpinionTrace trace;
  trace.meta = TraceMetadata{spec.alpha,         spec.beta,     spec.x0,
                             agent.geometry(),   spec.agent,    spec.platform,
                             spec.rewards,       spec.seed};
  const int s = agent.geometry().s;
  const int n = agent.geometry().n;
  trace.steps.reserve(static_cast<std::size_t>(agent.geometry().horizon()));
  trace.blocks.reserve(static_cast<std::size_t>(n));

  double x = spec.x0;
  long long k = 0;
  for (int block = 0; block < n; ++block) {
    for (int j = 0; j < s; ++j, ++k) {
      const double u = platform.recommend(k);
      const bool clk = agent.decide_click(j);
      const double d = std::abs(x - u);
      const double agent_reward = clk ? spec.rewards.agent(d) : 0.0;
      const double platform_reward = clk ? spec.rewards.platform(d) : 0.0;
      trace.steps.push_back(StepRecord{k, x, u, clk, agent_reward, platform_reward});
      x = step(params, spec.x0, x, u, clk);
      platform.observe_outcome(k, u, clk, platform_reward);
    }
    agent = agent.end_of_block_update(x, spec.x0);
    trace.blocks.push_back(BlockBoundary{block + 1, x, agent.current_clicks()});
  }
  trace.final_x = x;
  return trace;
}

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

bool same_step(const StepRecord& a, const StepRecord& b) {
  return a.k == b.k && same_bits(a.x, b.x) && same_bits(a.u, b.u) && a.clicked == b.clicked &&
         same_bits(a.agent_reward, b.agent_reward) &&
         same_bits(a.platform_reward, b.platform_reward);
}

}  // namespace

ReplayResult replay_check(const OpinionTrace& trace) {
  const auto& g = trace.meta.geometry;
  if (g.s < 1 || g.n < 1 || trace.horizon() != g.horizon() ||
      trace.blocks.size() != static_cast<std::size_t>(g.n)) {
    throw Error(ErrorKind::CorruptTrace, "trace length does not match its geometry");
  }
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    if (trace.steps[k].k != static_cast<long long>(k)) {
      throw Error(ErrorKind::CorruptTrace, "step indices are not contiguous");
    }
  }
  OpinionTrace fresh;
  try {
    fresh = run(spec_from_metadata(trace.meta));
  } catch (const Error& e) {
    throw Error(ErrorKind::CorruptTrace, std::string("metadata does not describe a valid run: ") + e.what());
  }
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    if (!same_step(trace.steps[k], fresh.steps[k])) {
      return ReplayResult{false, static_cast<long long>(k)};
    }
  }
  bool tail_ok = same_bits(trace.final_x, fresh.final_x);
  for (std::size_t i = 0; i < trace.blocks.size() && tail_ok; ++i) {
    const auto& a = trace.blocks[i];
    const auto& b = fresh.blocks[i];
    tail_ok = a.i == b.i && same_bits(a.x_block, b.x_block) && a.clicks == b.clicks;
  }
  if (!tail_ok) return ReplayResult{false, trace.horizon()};
  return ReplayResult{true, std::nullopt};
}

}  // namespace reactsim
