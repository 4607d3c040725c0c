#include "reactsim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "reactsim/config.hpp"
#include "reactsim/error.hpp"
#include "reactsim/io.hpp"
#include "reactsim/oracle.hpp"
#include "reactsim/payoffs.hpp"
#include "reactsim/population.hpp"
#include "reactsim/verify.hpp"

namespace reactsim {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string preset;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string suite = "all";
  int jobs = 0;
};

// Accepts a plain scenario file or a metadata.json written by this tool.
ScenarioConfig read_config(const Options& opt) {
  if (opt.config.empty() == opt.preset.empty()) {
    throw Error(ErrorKind::InvalidConfig, "give exactly one of --config or --preset");
  }
  if (!opt.preset.empty()) return parse_config(preset_text(opt.preset));
  ScenarioConfig probe = [&] {
    try {
      return load_config(opt.config);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidConfig) throw;
      std::ifstream in(opt.config, std::ios::binary);
      json root = json::parse(in, nullptr, false);
      if (root.is_object() && root.contains("config") && root.contains("artifacts")) {
        return parse_config(root["config"].dump());
      }
      throw;
    }
  }();
  return probe;
}

ScenarioConfig resolve(const Options& opt) {
  ScenarioConfig cfg = read_config(opt);
  if (opt.seed) cfg.scenario.seed = *opt.seed;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) cfg.output_dir = env;
  if (!opt.out.empty()) cfg.output_dir = opt.out;
  validate_config(cfg);
  return cfg;
}

std::string join(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

json derived_constants(const ScenarioConfig& cfg) {
  const auto p = validate_params(cfg.scenario.alpha, cfg.scenario.beta);
  return {{"Z", p.z()}, {"B", p.b()}, {"eta", p.eta()}};
}

void write_metadata(const ScenarioConfig& cfg, const std::string& command, const std::vector<std::string>& files,
                    json extra) {
  json meta = {{"tool", "reactsim"},
               {"command", command},
               {"config", json::parse(dump_config(cfg))},
               {"derived", derived_constants(cfg)},
               {"artifacts", files}};
  for (auto& [k, v] : extra.items()) meta[k] = v;
  write_file(join(cfg.output_dir, "metadata.json"), meta.dump(2) + "\n");
}

int cmd_run(const ScenarioConfig& cfg, std::ostream& out) {
  std::vector<std::string> files;
  std::string summary = "policy,final_opinion,final_drift,final_agent_utility,final_platform_utility\n";
  json policies = json::array();
  for (const auto& policy : cfg.policies()) {
    RunSpec spec = cfg.scenario;
    spec.agent = policy;
    const OpinionTrace trace = run(spec);
    const std::string tag(to_string(policy.kind));
    const auto series = utility_series(trace, spec.rewards, cfg.lambda);
    for (const auto& [name, body] : {std::pair{"trace_" + tag + ".csv", trace_csv(trace)},
                                     std::pair{"blocks_" + tag + ".csv", blocks_csv(trace)},
                                     std::pair{"utility_" + tag + ".csv", utility_csv(series)}}) {
      write_file(join(cfg.output_dir, name), body);
      files.push_back(name);
    }
    const double drift = std::abs(trace.final_x - trace.x0());
    summary += tag + ',' + format_double(trace.final_x) + ',' + format_double(drift) + ',' +
               format_double(series.back().agent) + ',' + format_double(series.back().platform) + '\n';
    policies.push_back({{"policy", tag}, {"steps", trace.horizon()}, {"blocks", trace.blocks.size()}});
  }
  write_file(join(cfg.output_dir, "summary.csv"), summary);
  files.push_back("summary.csv");
  write_metadata(cfg, "run", files, {{"runs", policies}});
  out << "run: wrote " << files.size() + 1 << " files to " << cfg.output_dir << "\n";
  return kExitOk;
}

int cmd_sweep(const ScenarioConfig& cfg, int jobs, std::ostream& out) {
  const SweepSpec spec = sweep_spec(cfg);
  const auto rows = run_sweep(spec, jobs);
  const std::string param(to_string(spec.parameter));
  const std::string name = "sweep_" + param + ".csv";
  write_file(join(cfg.output_dir, name), sweep_csv(param, rows));
  write_metadata(cfg, "sweep", {name}, {{"cells", rows.size()}});
  out << "sweep: " << rows.size() << " cells over " << param << " written to " << cfg.output_dir << "\n";
  return kExitOk;
}

int cmd_population(const ScenarioConfig& cfg, int jobs, std::ostream& out) {
  const PopulationSpec spec = population_spec(cfg);
  const auto result = run_population(spec, jobs);
  std::vector<std::pair<std::string, std::string>> artifacts{
      {"histogram_innate.csv", histogram_csv(result.innate_hist)},
      {"histogram_recommendation.csv", histogram_csv(result.recommendation_hist)},
  };
  for (const auto& o : result.outcomes) {
    artifacts.emplace_back("histogram_final_" + std::string(to_string(o.agent.kind)) + ".csv",
                           histogram_csv(o.final_hist));
  }
  artifacts.emplace_back("agents.csv", population_agents_csv(result));
  artifacts.emplace_back("population_summary.csv", population_summary_csv(result));
  std::vector<std::string> files;
  for (const auto& [name, body] : artifacts) {
    write_file(join(cfg.output_dir, name), body);
    files.push_back(name);
  }
  write_metadata(cfg, "population", files, {{"agent_seeds", {{"first", spec.base_seed}, {"count", spec.count}}}});
  out << "population: " << spec.count << " agents x " << result.outcomes.size() << " policies written to "
      << cfg.output_dir << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto reports = run_suites(opt.suite, opt.jobs);
  const std::string text = report_json(reports);
  std::string dir = opt.out;
  if (dir.empty()) {
    if (const char* env = std::getenv(kOutDirEnv); env && *env) dir = env;
  }
  if (!dir.empty()) write_file(join(dir, "verify_report.json"), text);
  out << text;
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.pass(); });
  return ok ? kExitOk : kExitVerifyFailed;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate reactive agents facing a recommendation platform", "reactsim"};
  app.require_subcommand(1);
  Options opt;

  auto add_scenario_flags = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "Scenario JSON file (or a metadata.json from an earlier run)");
    sub->add_option("--preset", opt.preset, "Bundled preset name");
    sub->add_option("--out", opt.out, std::string("Output directory (overrides ") + kOutDirEnv + " and the config)");
    sub->add_option("--seed", opt.seed, "Seed override");
    sub->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  };
  auto* run_cmd = app.add_subcommand("run", "Simulate one trace per agent policy");
  add_scenario_flags(run_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter over a grid");
  add_scenario_flags(sweep_cmd);
  auto* pop_cmd = app.add_subcommand("population", "Simulate a population of independent agents");
  add_scenario_flags(pop_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms, limits and monotonicity properties");
  verify_cmd->add_option("--suite", opt.suite, "oracle-equivalence | monotonicity | limits | all");
  verify_cmd->add_option("--out", opt.out, "Directory for verify_report.json");
  verify_cmd->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "InvalidConfig", e.what());
    return kExitInvalid;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(opt, out);
    const ScenarioConfig cfg = resolve(opt);
    if (run_cmd->parsed()) return cmd_run(cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, opt.jobs, out);
    return cmd_population(cfg, opt.jobs, out);
  } catch (const Error& e) {
    emit_error(err, to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::Io ? kExitIo : kExitInvalid;
  } catch (const std::exception& e) {
    emit_error(err, "Internal", e.what());
    return kExitIo;
  }
}

int cli_main(int argc, char** argv) {
  return cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace reactsim
