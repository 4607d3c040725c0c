#pragma once

#include <string>
#include <vector>

#include "reactsim/payoffs.hpp"
#include "reactsim/population.hpp"
#include "reactsim/trace.hpp"
#include "reactsim/verify.hpp"

namespace reactsim {

/// Shortest-safe text form with 17 significant digits, so every double
/// parses back to the same bits.
std::string format_double(double v);

std::string trace_csv(const OpinionTrace& trace);
std::string blocks_csv(const OpinionTrace& trace);
std::string utility_csv(const std::vector<UtilityPoint>& series);
std::string histogram_csv(const Histogram& hist);
std::string sweep_csv(std::string_view parameter, const std::vector<SweepRow>& rows);
std::string population_agents_csv(const PopulationResult& result);
std::string population_summary_csv(const PopulationResult& result);
std::string report_json(const std::vector<SuiteReport>& reports);

/// Parses a trace CSV back into step records (metadata is not included).
/// Throws Error(CorruptTrace) on malformed input.
std::vector<StepRecord> parse_trace_csv(const std::string& text);

/// Creates parent directories as needed. Throws Error(Io).
void write_file(const std::string& path, const std::string& contents);

}  // namespace reactsim
