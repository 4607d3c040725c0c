#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reactsim/engine.hpp"
#include "reactsim/population.hpp"

namespace reactsim {

struct PopulationBlock {
  int count = 2000;
  Distribution innate = Distribution::uniform();
  Distribution recommendation = Distribution::gaussian(0.0, 0.5);
  int bins = 40;
};

struct SweepBlock {
  SweepParameter parameter = SweepParameter::Alpha;
  std::vector<double> values;
};

/// One scenario file. `scenario.agent` carries the policy constants shared by
/// every kind in `kinds`; each kind yields its own run.
struct ScenarioConfig {
  std::string name;
  RunSpec scenario;
  std::vector<AgentPolicyKind> kinds{AgentPolicyKind::Fixed};
  double lambda = 0.5;
  std::string output_dir = "out";
  std::optional<PopulationBlock> population;
  std::optional<SweepBlock> sweep;

  std::vector<AgentPolicyConfig> policies() const;
};

/// Parses the JSON dialect. Missing keys take their defaults, unknown keys
/// and wrongly typed values throw Error(InvalidConfig).
ScenarioConfig parse_config(const std::string& text);

/// Throws Error(Io) if the file cannot be read.
ScenarioConfig load_config(const std::string& path);

/// Fully resolved JSON (every default written out). parse_config of the
/// result yields an identical configuration.
std::string dump_config(const ScenarioConfig& config);

/// Runs every owning module's validator. Throws Error(InvalidParams).
void validate_config(const ScenarioConfig& config);

PopulationSpec population_spec(const ScenarioConfig& config);
SweepSpec sweep_spec(const ScenarioConfig& config);

/// Names of the bundled presets.
std::vector<std::string> preset_names();
/// JSON text of a bundled preset. Throws Error(InvalidConfig) for an unknown name.
std::string preset_text(const std::string& name);

}  // namespace reactsim
