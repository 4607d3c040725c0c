#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace reactsim {

/// One checked property on one parameter line. On failure `counterexample`
/// holds the parameters and the offending values.
struct PropertyRow {
  std::string property;
  std::string grid_line;
  bool pass = true;
  std::map<std::string, double> counterexample;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyRow> rows;

  bool pass() const;
  std::size_t failures() const;
  /// True when every row of `property` passed (and at least one exists).
  bool property_passes(const std::string& property) const;
};

/// Parameter grid for the monotonicity properties of the block weights.
struct MonotonicityGrid {
  std::vector<double> betas{0.05, 0.1, 0.2, 0.3, 0.45};
  int alpha_points = 11;
  std::vector<int> block_lengths{4, 8};
  int max_block = 12;
  std::vector<double> kappas{2.0, 4.0, 8.0};
  int kappa_t0 = 8;
  std::vector<int> taus{1, 2, 3, 4};
  double slack = 1e-12;
};

/// Property names, one per line of the report.
inline const std::vector<std::string>& monotonicity_properties() {
  static const std::vector<std::string> names{
      "alpha_monotonicity_fixed", "alpha_monotonicity_decreasing", "alpha_monotonicity_adaptive",
      "i_monotonicity_concavity", "t0_monotonicity",               "kappa_monotonicity",
      "tau_monotonicity"};
  return names;
}

SuiteReport monotonicity_suite(const MonotonicityGrid& grid = {}, int jobs = 0);

struct EquivalenceGrid {
  int tuples = 240;
  int max_block = 12;
  std::uint64_t seed = 20240601;
  double tolerance = 1e-9;
  double convexity_tolerance = 1e-12;
};

/// Closed forms against the extended-precision recursion for all three
/// agent policies, plus the convexity and range checks on every weight.
SuiteReport oracle_equivalence_suite(const EquivalenceGrid& grid = {}, int jobs = 0);

/// Long-horizon simulations at the reference scenario against the limit
/// opinions and limit utilities.
SuiteReport limits_suite(int jobs = 0);

/// "oracle-equivalence", "monotonicity", "limits" or "all".
/// Throws Error(InvalidConfig) for an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, int jobs = 0);

}  // namespace reactsim
