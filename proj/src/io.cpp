#include "reactsim/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "reactsim/error.hpp"

namespace reactsim {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string trace_csv(const OpinionTrace& trace) {
  std::string out = "k,x,u,clk,agent_reward,platform_reward\n";
  for (const auto& r : trace.steps) {
    out += std::to_string(r.k) + ',' + format_double(r.x) + ',' + format_double(r.u) + ',' +
           (r.clicked ? '1' : '0') + ',' + format_double(r.agent_reward) + ',' +
           format_double(r.platform_reward) + '\n';
  }
  return out;
}

std::string blocks_csv(const OpinionTrace& trace) {
  std::string out = "i,x_block,T_i\n";
  out += "0," + format_double(trace.x0()) + ',' + std::to_string(trace.meta.agent.t0) + '\n';
  for (const auto& b : trace.blocks) {
    out += std::to_string(b.i) + ',' + format_double(b.x_block) + ',' + std::to_string(b.clicks) + '\n';
  }
  return out;
}

std::string utility_csv(const std::vector<UtilityPoint>& series) {
  std::string out = "k,agent_utility,platform_utility\n";
  for (const auto& p : series) {
    out += std::to_string(p.k) + ',' + format_double(p.agent) + ',' + format_double(p.platform) + '\n';
  }
  return out;
}

std::string histogram_csv(const Histogram& hist) {
  std::string out = "bin_left,bin_right,count\n";
  for (int b = 0; b < hist.bins(); ++b) {
    out += format_double(hist.bin_left(b)) + ',' + format_double(hist.bin_right(b)) + ',' +
           std::to_string(hist.counts[b]) + '\n';
  }
  return out;
}

std::string sweep_csv(std::string_view parameter, const std::vector<SweepRow>& rows) {
  std::string out = std::string(parameter) +
                    ",policy,final_opinion,final_drift,final_agent_utility,final_platform_utility\n";
  for (const auto& r : rows) {
    out += format_double(r.value) + ',' + std::string(to_string(r.policy)) + ',' + format_double(r.final_opinion) +
           ',' + format_double(r.final_drift) + ',' + format_double(r.final_agent_utility) + ',' +
           format_double(r.final_platform_utility) + '\n';
  }
  return out;
}

std::string population_agents_csv(const PopulationResult& result) {
  std::string out = "agent,x0,u0";
  for (const auto& o : result.outcomes) out += ",final_" + std::string(to_string(o.agent.kind));
  out += '\n';
  for (std::size_t j = 0; j < result.innate.size(); ++j) {
    out += std::to_string(j) + ',' + format_double(result.innate[j]) + ',' + format_double(result.recommendation[j]);
    for (const auto& o : result.outcomes) out += ',' + format_double(o.final_opinions[j]);
    out += '\n';
  }
  return out;
}

std::string population_summary_csv(const PopulationResult& result) {
  std::string out = "policy,w_final_innate,w_final_recommendation,w_innate_recommendation\n";
  const double base = distribution_distance(result.innate_hist, result.recommendation_hist);
  for (const auto& o : result.outcomes) {
    out += std::string(to_string(o.agent.kind)) + ',' + format_double(o.distance_to_innate) + ',' +
           format_double(o.distance_to_recommendation) + ',' + format_double(base) + '\n';
  }
  return out;
}

std::string report_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json root = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
      nlohmann::json row = {{"property", r.property}, {"grid_line", r.grid_line}, {"pass", r.pass}};
      if (!r.pass) row["counterexample"] = r.counterexample;
      rows.push_back(row);
    }
    root.push_back({{"suite", rep.suite}, {"pass", rep.pass()}, {"failures", rep.failures()}, {"rows", rows}});
  }
  return root.dump(2) + "\n";
}

namespace {

double parse_number(const std::string& field, long long line) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw Error(ErrorKind::CorruptTrace, "bad number '" + field + "' on line " + std::to_string(line));
  }
  return v;
}

}  // namespace

std::vector<StepRecord> parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "k,x,u,clk,agent_reward,platform_reward") {
    throw Error(ErrorKind::CorruptTrace, "missing trace header");
  }
  std::vector<StepRecord> out;
  long long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 6 || (f[3] != "0" && f[3] != "1")) {
      throw Error(ErrorKind::CorruptTrace, "malformed trace line " + std::to_string(lineno));
    }
    StepRecord r;
    r.k = static_cast<long long>(parse_number(f[0], lineno));
    r.x = parse_number(f[1], lineno);
    r.u = parse_number(f[2], lineno);
    r.clicked = f[3] == "1";
    r.agent_reward = parse_number(f[4], lineno);
    r.platform_reward = parse_number(f[5], lineno);
    out.push_back(r);
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) {
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create directory '" + p.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << contents;
  out.close();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path + "'");
}

}  // namespace reactsim
