#include <map>
#include <string>
#include <vector>

#include "reactsim/config.hpp"
#include "reactsim/error.hpp"

namespace reactsim {

namespace {

const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> table{
      {"fig3_fixed_recommendation", R"({
  "name": "fig3_fixed_recommendation",
  "dynamics": {"alpha": 0.25, "beta": 0.2},
  "geometry": {"s": 8, "n": 10},
  "agent": {"kinds": ["fixed", "decreasing", "adaptive"], "t0": 8, "kappa": 2, "tau": 3, "x_drift": 0.1},
  "platform": {"kind": "fixed", "u0": 1},
  "rewards": {"agent": {"kind": "linear", "c": 0.1}, "platform": {"kind": "linear", "c": 0.1}},
  "lambda": 0.5,
  "x0": -1,
  "seed": 42,
  "output_dir": "out/fig3_fixed_recommendation"
})"},
      {"fig4_explore_periodically", R"({
  "name": "fig4_explore_periodically",
  "dynamics": {"alpha": 0.25, "beta": 0.2},
  "geometry": {"s": 8, "n": 20},
  "agent": {"kinds": ["fixed", "decreasing", "adaptive"], "t0": 8, "kappa": 2, "tau": 1, "x_drift": 0.1},
  "platform": {"kind": "explore", "delta": 18, "distribution": {"kind": "uniform", "lo": -1, "hi": 1}},
  "rewards": {"agent": {"kind": "linear", "c": 0.1}, "platform": {"kind": "linear", "c": 0.1}},
  "lambda": 0.5,
  "x0": -1,
  "seed": 42,
  "output_dir": "out/fig4_explore_periodically"
})"},
      {"fig3d_population", R"({
  "name": "fig3d_population",
  "dynamics": {"alpha": 0.25, "beta": 0.2},
  "geometry": {"s": 8, "n": 50},
  "agent": {"kinds": ["fixed", "decreasing", "adaptive"], "t0": 8, "kappa": 2, "tau": 3, "x_drift": 0.4},
  "platform": {"kind": "fixed", "u0": 0},
  "rewards": {"agent": {"kind": "linear", "c": 0.1}, "platform": {"kind": "linear", "c": 0.1}},
  "lambda": 0.5,
  "seed": 42,
  "population": {
    "count": 2000,
    "bins": 40,
    "innate": {"kind": "uniform", "lo": -1, "hi": 1},
    "recommendation": {"kind": "gaussian", "mean": 0, "stddev": 0.5, "lo": -1, "hi": 1}
  },
  "output_dir": "out/fig3d_population"
})"},
      {"appendixB_alpha_sweep", R"({
  "name": "appendixB_alpha_sweep",
  "dynamics": {"alpha": 0.25, "beta": 0.1},
  "geometry": {"s": 8, "n": 10},
  "agent": {"kinds": ["fixed", "decreasing", "adaptive"], "t0": 8, "kappa": 2, "tau": 3, "x_drift": 0.1},
  "platform": {"kind": "fixed", "u0": 1},
  "rewards": {"agent": {"kind": "linear", "c": 0.1}, "platform": {"kind": "linear", "c": 0.1}},
  "lambda": 0.5,
  "x0": -1,
  "seed": 42,
  "sweep": {"parameter": "alpha", "start": 0.105, "stop": 0.895, "step": 0.01},
  "output_dir": "out/appendixB_alpha_sweep"
})"},
      {"appendixB_x0_sweep", R"({
  "name": "appendixB_x0_sweep",
  "dynamics": {"alpha": 0.25, "beta": 0.2},
  "geometry": {"s": 8, "n": 10},
  "agent": {"kinds": ["fixed", "decreasing", "adaptive"], "t0": 8, "kappa": 2, "tau": 3, "x_drift": 0.1},
  "platform": {"kind": "fixed", "u0": 0},
  "rewards": {"agent": {"kind": "linear", "c": 0.1}, "platform": {"kind": "linear", "c": 0.1}},
  "lambda": 0.5,
  "x0": -1,
  "seed": 42,
  "sweep": {"parameter": "x0", "start": -1, "stop": 1, "step": 0.1},
  "output_dir": "out/appendixB_x0_sweep"
})"},
      {"appendixB_lambda_sweep", R"({
  "name": "appendixB_lambda_sweep",
  "dynamics": {"alpha": 0.25, "beta": 0.2},
  "geometry": {"s": 8, "n": 10},
  "agent": {"kinds": ["fixed", "decreasing", "adaptive"], "t0": 8, "kappa": 2, "tau": 3, "x_drift": 0.1},
  "platform": {"kind": "fixed", "u0": 1},
  "rewards": {"agent": {"kind": "linear", "c": 0.1}, "platform": {"kind": "linear", "c": 0.1}},
  "lambda": 0.5,
  "x0": -1,
  "seed": 42,
  "sweep": {"parameter": "lambda", "start": 0, "stop": 1, "step": 0.05},
  "output_dir": "out/appendixB_lambda_sweep"
})"},
      {"appendixB_u0_sweep", R"({
  "name": "appendixB_u0_sweep",
  "dynamics": {"alpha": 0.25, "beta": 0.2},
  "geometry": {"s": 8, "n": 10},
  "agent": {"kinds": ["fixed", "decreasing", "adaptive"], "t0": 8, "kappa": 2, "tau": 3, "x_drift": 0.1},
  "platform": {"kind": "fixed", "u0": 1},
  "rewards": {"agent": {"kind": "linear", "c": 0.1}, "platform": {"kind": "linear", "c": 0.1}},
  "lambda": 0.5,
  "x0": 1,
  "seed": 42,
  "sweep": {"parameter": "u0", "start": -1, "stop": 1, "step": 0.1},
  "output_dir": "out/appendixB_u0_sweep"
})"},
  };
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : presets()) out.push_back(name);
  return out;
}

std::string preset_text(const std::string& name) {
  const auto& table = presets();
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& [n, t] : table) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::InvalidConfig, "unknown preset '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

}  // namespace reactsim
