#include <cmath>
#include <cstring>

#include "doctest.h"
#include "reactsim/error.hpp"
#include "reactsim/oracle.hpp"
#include "reactsim/population.hpp"

using namespace reactsim;

namespace {

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

PopulationSpec small_population(int count, int blocks) {
  PopulationSpec spec;
  spec.count = count;
  spec.scenario.geometry = BlockGeometry{8, blocks};
  spec.scenario.agent = AgentPolicyConfig{AgentPolicyKind::Fixed, 8, 2.0, 3, 0.4};
  spec.scenario.rewards = RewardFns{RewardFn::linear(0.1), RewardFn::linear(0.1)};
  for (auto kind : {AgentPolicyKind::Fixed, AgentPolicyKind::Decreasing, AgentPolicyKind::AdaptiveDecreasing}) {
    auto a = spec.scenario.agent;
    a.kind = kind;
    spec.policies.push_back(a);
  }
  spec.base_seed = 7;
  return spec;
}

SweepSpec lambda_sweep() {
  SweepSpec spec;
  spec.parameter = SweepParameter::Lambda;
  spec.values = {0.0, 0.25, 0.5, 0.75, 1.0};
  spec.scenario.geometry = BlockGeometry{8, 10};
  spec.scenario.x0 = -1.0;
  spec.scenario.platform.u0 = 1.0;
  spec.scenario.agent = AgentPolicyConfig{AgentPolicyKind::Fixed, 8, 2.0, 3, 0.1};
  spec.scenario.rewards = RewardFns{RewardFn::linear(0.1), RewardFn::linear(0.1)};
  spec.policies = small_population(1, 1).policies;
  return spec;
}

}  // namespace

TEST_CASE("histogram bins cover the interval with a closed right edge") {
  auto h = Histogram::uniform(4);
  h.add(-1.0);
  h.add(1.0);
  h.add(0.0);
  h.add(-0.5);
  CHECK(h.counts == std::vector<long long>{1, 1, 1, 1});
  CHECK(h.total() == 4);
  CHECK(h.bin_left(2) == 0.0);
  CHECK(h.bin_right(3) == 1.0);
  CHECK(error_of([&] { h.add(1.5); }) == ErrorKind::InvalidParams);
}

TEST_CASE("distance between opposite point masses") {
  const std::vector<double> lo(10, -1.0), hi(10, 1.0);
  CHECK(distribution_distance(make_histogram(lo), make_histogram(hi)) == doctest::Approx(1.95).epsilon(1e-12));
  CHECK(wasserstein_samples(lo, hi) == 2.0);
  CHECK(distribution_distance(make_histogram(lo), make_histogram(lo)) == 0.0);
}

TEST_CASE("distance is symmetric and matches the exact value on bin centres") {
  const std::vector<double> a{-0.975, -0.975, 0.025}, b{0.025, 0.525, 0.525};
  const double d = distribution_distance(make_histogram(a), make_histogram(b));
  CHECK(d == doctest::Approx(wasserstein_samples(a, b)).epsilon(1e-12));
  CHECK(d == doctest::Approx(distribution_distance(make_histogram(b), make_histogram(a))).epsilon(1e-15));
}

TEST_CASE("distance rejects mismatched bins and empty histograms") {
  const std::vector<double> v{0.0};
  CHECK(error_of([&] { distribution_distance(make_histogram(v, 40), make_histogram(v, 20)); }) ==
        ErrorKind::BinningMismatch);
  CHECK(error_of([&] { distribution_distance(make_histogram(v, 40, -1, 1), make_histogram(v, 40, -2, 2)); }) ==
        ErrorKind::BinningMismatch);
  CHECK(error_of([&] { distribution_distance(Histogram::uniform(40), make_histogram(v)); }) ==
        ErrorKind::InvalidParams);
}

TEST_CASE("a single point-mass agent reduces to one engine run") {
  auto spec = small_population(1, 10);
  spec.innate = Distribution::point(-0.4);
  spec.recommendation = Distribution::point(0.6);
  const auto result = run_population(spec, 1);
  for (std::size_t p = 0; p < spec.policies.size(); ++p) {
    RunSpec one = spec.scenario;
    one.agent = spec.policies[p];
    one.x0 = -0.4;
    one.platform.u0 = 0.6;
    one.seed = spec.base_seed;
    CHECK(result.outcomes[p].final_opinions.at(0) == run(one).final_x);
  }
}

TEST_CASE("per-agent limits under fixed and decreasing policies") {
  const auto spec = small_population(200, 200);
  const auto result = run_population(spec, 0);
  const auto params = validate_params(spec.scenario.alpha, spec.scenario.beta);
  for (std::size_t j = 0; j < result.innate.size(); ++j) {
    const double x0 = result.innate[j], u0 = result.recommendation[j];
    CHECK(std::abs(result.outcomes[0].final_opinions[j] - (params.eta() * x0 + (1 - params.eta()) * u0)) <= 1e-3);
    CHECK(std::abs(result.outcomes[1].final_opinions[j] - x0) <= 1e-3);
  }
}

TEST_CASE("population results do not depend on the worker count") {
  const auto spec = small_population(64, 20);
  const auto a = run_population(spec, 1);
  const auto b = run_population(spec, 3);
  CHECK(a.innate == b.innate);
  CHECK(a.recommendation == b.recommendation);
  for (std::size_t p = 0; p < a.outcomes.size(); ++p) {
    CHECK(a.outcomes[p].final_opinions == b.outcomes[p].final_opinions);
    CHECK(a.outcomes[p].final_hist.counts == b.outcomes[p].final_hist.counts);
  }
}

TEST_CASE("population validation") {
  auto spec = small_population(0, 10);
  CHECK(error_of([&] { validate_population(spec); }) == ErrorKind::InvalidParams);
  spec.count = 10;
  spec.innate = Distribution::uniform(0.5, -0.5);
  CHECK(error_of([&] { run_population(spec); }) == ErrorKind::InvalidParams);
}

TEST_CASE("sweeping u0 at u0 = x0 leaves every policy at zero drift") {
  auto spec = lambda_sweep();
  spec.parameter = SweepParameter::U0;
  spec.values = {-1.0};
  for (const auto& row : run_sweep(spec)) {
    CHECK(row.final_drift == 0.0);
    CHECK(row.final_opinion == -1.0);
  }
}

TEST_CASE("lambda leaves opinions and platform utility bit-identical") {
  const auto spec = lambda_sweep();
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == spec.values.size() * spec.policies.size());
  const std::size_t np = spec.policies.size();
  for (std::size_t r = np; r < rows.size(); ++r) {
    const auto& base = rows[r % np];
    CHECK(rows[r].policy == base.policy);
    CHECK(std::memcmp(&rows[r].final_opinion, &base.final_opinion, sizeof(double)) == 0);
    CHECK(std::memcmp(&rows[r].final_platform_utility, &base.final_platform_utility, sizeof(double)) == 0);
  }
}

TEST_CASE("sweep parameter names round-trip") {
  for (auto p : {SweepParameter::Alpha, SweepParameter::Beta, SweepParameter::Lambda, SweepParameter::X0,
                 SweepParameter::U0, SweepParameter::T0, SweepParameter::Kappa, SweepParameter::Tau,
                 SweepParameter::XDrift, SweepParameter::C}) {
    CHECK(parse_sweep_parameter(to_string(p)) == p);
  }
  CHECK(error_of([] { parse_sweep_parameter("gamma"); }) == ErrorKind::InvalidConfig);
}

TEST_CASE("invalid sweep cells are rejected before running") {
  auto spec = lambda_sweep();
  spec.parameter = SweepParameter::Tau;
  spec.values = {1.0, 2.5};
  CHECK(error_of([&] { validate_sweep(spec); }) == ErrorKind::InvalidParams);
  spec.parameter = SweepParameter::Alpha;
  spec.values = {0.1};
  CHECK(error_of([&] { run_sweep(spec); }) == ErrorKind::InvalidParams);
}
