#include "reactsim/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "reactsim/error.hpp"
#include "reactsim/payoffs.hpp"

namespace reactsim {

using nlohmann::json;

std::vector<AgentPolicyConfig> ScenarioConfig::policies() const {
  std::vector<AgentPolicyConfig> out;
  for (auto kind : kinds) {
    AgentPolicyConfig p = scenario.agent;
    p.kind = kind;
    out.push_back(p);
  }
  return out;
}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  throw Error(ErrorKind::InvalidConfig, path + ": " + why);
}

// Typed access to one JSON object that remembers which keys were read, so
// leftovers can be reported as unknown.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) bad(path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  double number(const std::string& key, double fallback) {
    const json* v = take(key);
    if (!v) return fallback;
    if (!v->is_number()) bad(at(key), "expected a number");
    return v->get<double>();
  }

  int integer(const std::string& key, int fallback) {
    const json* v = take(key);
    if (!v) return fallback;
    if (!v->is_number_integer()) bad(at(key), "expected an integer");
    const auto raw = v->get<long long>();
    if (raw < INT32_MIN || raw > INT32_MAX) bad(at(key), "integer out of range");
    return static_cast<int>(raw);
  }

  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) {
    const json* v = take(key);
    if (!v) return fallback;
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
      bad(at(key), "expected a non-negative integer");
    }
    return v->get<std::uint64_t>();
  }

  std::string string(const std::string& key, const std::string& fallback) {
    const json* v = take(key);
    if (!v) return fallback;
    if (!v->is_string()) bad(at(key), "expected a string");
    return v->get<std::string>();
  }

  const json* take(const std::string& key) {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string at(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!used_.count(it.key())) bad(path_, "unknown key '" + it.key() + "'");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

Distribution read_distribution(const json& j, const std::string& path, const Distribution& fallback) {
  Reader r(j, path);
  const std::string kind = r.string("kind", std::string(to_string(fallback.kind)));
  Distribution d;
  if (kind == "uniform") {
    d = Distribution::uniform(r.number("lo", -1.0), r.number("hi", 1.0));
  } else if (kind == "gaussian") {
    d = Distribution::gaussian(r.number("mean", 0.0), r.number("stddev", 0.5), r.number("lo", -1.0),
                               r.number("hi", 1.0));
  } else if (kind == "point") {
    if (!r.has("value")) bad(path, "point distribution needs 'value'");
    d = Distribution::point(r.number("value", 0.0));
  } else {
    bad(r.at("kind"), "unknown distribution '" + kind + "'");
  }
  r.finish();
  return d;
}

json write_distribution(const Distribution& d) {
  switch (d.kind) {
    case DistributionKind::Uniform: return {{"kind", "uniform"}, {"lo", d.lo}, {"hi", d.hi}};
    case DistributionKind::Gaussian:
      return {{"kind", "gaussian"}, {"mean", d.mean}, {"stddev", d.stddev}, {"lo", d.lo}, {"hi", d.hi}};
    case DistributionKind::Point: return {{"kind", "point"}, {"value", d.mean}};
  }
  return {};
}

RewardFn read_reward(const json& j, const std::string& path, const RewardFn& fallback) {
  Reader r(j, path);
  const std::string kind = r.string("kind", std::string(to_string(fallback.kind)));
  RewardFn fn;
  if (kind == "constant") {
    fn = RewardFn::constant();
  } else if (kind == "linear") {
    fn = RewardFn::linear(r.number("c", fallback.c));
  } else {
    bad(r.at("kind"), "unknown reward '" + kind + "'");
  }
  r.finish();
  return fn;
}

json write_reward(const RewardFn& fn) {
  if (fn.kind == RewardKind::Constant) return {{"kind", "constant"}};
  return {{"kind", "linear"}, {"c", fn.c}};
}

AgentPolicyKind read_kind(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a policy name");
  try {
    return parse_agent_policy_kind(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

void read_agent(const json& j, ScenarioConfig& cfg) {
  Reader r(j, "agent");
  const json* kind = r.take("kind");
  const json* kinds = r.take("kinds");
  if (kind && kinds) bad("agent", "give either 'kind' or 'kinds', not both");
  if (kind) {
    cfg.kinds = {read_kind(*kind, "agent.kind")};
  } else if (kinds) {
    if (!kinds->is_array() || kinds->empty()) bad("agent.kinds", "expected a non-empty array");
    cfg.kinds.clear();
    for (std::size_t i = 0; i < kinds->size(); ++i) {
      cfg.kinds.push_back(read_kind((*kinds)[i], "agent.kinds[" + std::to_string(i) + "]"));
    }
  }
  auto& a = cfg.scenario.agent;
  a.t0 = r.integer("t0", cfg.scenario.geometry.s);
  a.kappa = r.number("kappa", a.kappa);
  a.tau = r.integer("tau", a.tau);
  a.x_drift = r.number("x_drift", a.x_drift);
  r.finish();
}

void read_platform(const json& j, PlatformPolicyConfig& p) {
  Reader r(j, "platform");
  const std::string kind = r.string("kind", std::string(to_string(p.kind)));
  if (kind == "fixed") {
    p.kind = PlatformPolicyKind::FixedRecommendation;
    p.u0 = r.number("u0", p.u0);
  } else if (kind == "explore") {
    p.kind = PlatformPolicyKind::ExplorePeriodically;
    p.delta = r.integer("delta", p.delta);
    if (const json* d = r.take("distribution")) p.explore = read_distribution(*d, "platform.distribution", p.explore);
  } else {
    bad("platform.kind", "unknown platform policy '" + kind + "'");
  }
  r.finish();
}

std::vector<double> read_grid(const json& j) {
  Reader r(j, "sweep");
  std::vector<double> values;
  const json* list = r.take("values");
  const bool range = r.has("start") || r.has("stop") || r.has("step");
  if (list && range) bad("sweep", "give either 'values' or 'start'/'stop'/'step'");
  if (list) {
    if (!list->is_array() || list->empty()) bad("sweep.values", "expected a non-empty array of numbers");
    for (const auto& v : *list) {
      if (!v.is_number()) bad("sweep.values", "expected numbers");
      values.push_back(v.get<double>());
    }
  } else if (range) {
    const double start = r.number("start", 0.0);
    const double stop = r.number("stop", 0.0);
    const double step = r.number("step", 0.0);
    if (!(step > 0.0) || !(stop >= start)) bad("sweep", "range needs step > 0 and stop >= start");
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) bad("sweep", "range has too many points");
    for (long long k = 0; k < count; ++k) values.push_back(start + static_cast<double>(k) * step);
  } else {
    bad("sweep", "missing 'values' or 'start'/'stop'/'step'");
  }
  return values;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
  }
  ScenarioConfig cfg;
  cfg.scenario.rewards = RewardFns{RewardFn::linear(0.1), RewardFn::linear(0.1)};
  cfg.scenario.geometry = BlockGeometry{8, 10};
  cfg.scenario.platform.u0 = 1.0;
  cfg.scenario.x0 = -1.0;
  Reader r(root, "config");
  cfg.name = r.string("name", "");
  cfg.lambda = r.number("lambda", cfg.lambda);
  cfg.scenario.x0 = r.number("x0", cfg.scenario.x0);
  cfg.scenario.seed = r.unsigned_integer("seed", cfg.scenario.seed);
  cfg.output_dir = r.string("output_dir", cfg.output_dir);
  if (const json* d = r.take("dynamics")) {
    Reader dr(*d, "dynamics");
    cfg.scenario.alpha = dr.number("alpha", cfg.scenario.alpha);
    cfg.scenario.beta = dr.number("beta", cfg.scenario.beta);
    dr.finish();
  }
  if (const json* g = r.take("geometry")) {
    Reader gr(*g, "geometry");
    cfg.scenario.geometry.s = gr.integer("s", cfg.scenario.geometry.s);
    cfg.scenario.geometry.n = gr.integer("n", cfg.scenario.geometry.n);
    gr.finish();
  }
  cfg.scenario.agent.t0 = cfg.scenario.geometry.s;
  cfg.scenario.agent.tau = 3;
  if (const json* a = r.take("agent")) read_agent(*a, cfg);
  if (const json* p = r.take("platform")) read_platform(*p, cfg.scenario.platform);
  if (const json* w = r.take("rewards")) {
    Reader wr(*w, "rewards");
    if (const json* a = wr.take("agent")) cfg.scenario.rewards.agent = read_reward(*a, "rewards.agent", cfg.scenario.rewards.agent);
    if (const json* p = wr.take("platform")) {
      cfg.scenario.rewards.platform = read_reward(*p, "rewards.platform", cfg.scenario.rewards.platform);
    }
    wr.finish();
  }
  if (const json* p = r.take("population")) {
    Reader pr(*p, "population");
    PopulationBlock block;
    block.count = pr.integer("count", block.count);
    block.bins = pr.integer("bins", block.bins);
    if (const json* d = pr.take("innate")) block.innate = read_distribution(*d, "population.innate", block.innate);
    if (const json* d = pr.take("recommendation")) {
      block.recommendation = read_distribution(*d, "population.recommendation", block.recommendation);
    }
    pr.finish();
    cfg.population = block;
  }
  if (const json* s = r.take("sweep")) {
    Reader sr(*s, "sweep");
    SweepBlock block;
    try {
      block.parameter = parse_sweep_parameter(sr.string("parameter", "alpha"));
    } catch (const Error& e) {
      bad("sweep.parameter", e.what());
    }
    sr.take("values");
    sr.take("start");
    sr.take("stop");
    sr.take("step");
    sr.finish();
    block.values = read_grid(*s);
    cfg.sweep = block;
  }
  r.finish();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read config '" + path + "'");
  return parse_config(text.str());
}

std::string dump_config(const ScenarioConfig& cfg) {
  const auto& sc = cfg.scenario;
  json kinds = json::array();
  for (auto k : cfg.kinds) kinds.push_back(std::string(to_string(k)));
  json platform;
  if (sc.platform.kind == PlatformPolicyKind::FixedRecommendation) {
    platform = {{"kind", "fixed"}, {"u0", sc.platform.u0}};
  } else {
    platform = {{"kind", "explore"}, {"delta", sc.platform.delta}, {"distribution", write_distribution(sc.platform.explore)}};
  }
  json root = {
      {"name", cfg.name},
      {"dynamics", {{"alpha", sc.alpha}, {"beta", sc.beta}}},
      {"geometry", {{"s", sc.geometry.s}, {"n", sc.geometry.n}}},
      {"agent",
       {{"kinds", kinds}, {"t0", sc.agent.t0}, {"kappa", sc.agent.kappa}, {"tau", sc.agent.tau}, {"x_drift", sc.agent.x_drift}}},
      {"platform", platform},
      {"rewards", {{"agent", write_reward(sc.rewards.agent)}, {"platform", write_reward(sc.rewards.platform)}}},
      {"lambda", cfg.lambda},
      {"x0", sc.x0},
      {"seed", sc.seed},
      {"output_dir", cfg.output_dir},
  };
  if (cfg.population) {
    root["population"] = {{"count", cfg.population->count},
                          {"bins", cfg.population->bins},
                          {"innate", write_distribution(cfg.population->innate)},
                          {"recommendation", write_distribution(cfg.population->recommendation)}};
  }
  if (cfg.sweep) {
    root["sweep"] = {{"parameter", std::string(to_string(cfg.sweep->parameter))}, {"values", cfg.sweep->values}};
  }
  return root.dump(2) + "\n";
}

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.kinds.empty()) throw Error(ErrorKind::InvalidParams, "at least one agent policy is required");
  validate_lambda(cfg.lambda);
  for (const auto& p : cfg.policies()) {
    RunSpec spec = cfg.scenario;
    spec.agent = p;
    validate_run_spec(spec);
  }
  if (cfg.population) validate_population(population_spec(cfg));
  if (cfg.sweep) validate_sweep(sweep_spec(cfg));
}

PopulationSpec population_spec(const ScenarioConfig& cfg) {
  if (!cfg.population) throw Error(ErrorKind::InvalidConfig, "config has no 'population' block");
  PopulationSpec spec;
  spec.count = cfg.population->count;
  spec.innate = cfg.population->innate;
  spec.recommendation = cfg.population->recommendation;
  spec.bins = cfg.population->bins;
  spec.scenario = cfg.scenario;
  spec.policies = cfg.policies();
  spec.base_seed = cfg.scenario.seed;
  return spec;
}

SweepSpec sweep_spec(const ScenarioConfig& cfg) {
  if (!cfg.sweep) throw Error(ErrorKind::InvalidConfig, "config has no 'sweep' block");
  SweepSpec spec;
  spec.parameter = cfg.sweep->parameter;
  spec.values = cfg.sweep->values;
  spec.scenario = cfg.scenario;
  spec.lambda = cfg.lambda;
  spec.policies = cfg.policies();
  return spec;
}

}  // namespace reactsim
