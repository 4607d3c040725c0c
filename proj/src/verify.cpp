#include "reactsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "reactsim/engine.hpp"
#include "reactsim/error.hpp"
#include "reactsim/oracle.hpp"
#include "reactsim/parallel.hpp"
#include "reactsim/payoffs.hpp"
#include "reactsim/random.hpp"

namespace reactsim {

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const PropertyRow& r) { return !r.pass; }));
}

bool SuiteReport::property_passes(const std::string& property) const {
  bool seen = false;
  for (const auto& r : rows) {
    if (r.property != property) continue;
    seen = true;
    if (!r.pass) return false;
  }
  return seen;
}

namespace {

using Params = std::map<std::string, double>;
using Task = std::function<std::vector<PropertyRow>()>;

PropertyRow new_row(std::string property, std::string grid_line) {
  PropertyRow r;
  r.property = std::move(property);
  r.grid_line = std::move(grid_line);
  return r;
}

std::string describe(const Params& p) {
  std::ostringstream out;
  out.precision(6);
  bool first = true;
  for (const auto& [k, v] : p) {
    out << (first ? "" : ",") << k << '=' << v;
    first = false;
  }
  return out.str();
}

enum class Direction { NonIncreasing, NonDecreasing, StrictlyDecreasing };

struct Violation {
  std::size_t at;
  double before;
  double after;
};

std::optional<Violation> find_violation(const std::vector<double>& v, Direction dir, double slack) {
  for (std::size_t j = 1; j < v.size(); ++j) {
    const double d = v[j] - v[j - 1];
    const bool bad = (dir == Direction::NonIncreasing && d > slack) ||
                     (dir == Direction::NonDecreasing && d < -slack) ||
                     (dir == Direction::StrictlyDecreasing && !(d < 0.0));
    if (bad) return Violation{j, v[j - 1], v[j]};
  }
  return std::nullopt;
}

// Concavity on an integer grid: forward differences are non-increasing.
std::optional<Violation> find_convex_kink(const std::vector<double>& v, double slack) {
  for (std::size_t j = 2; j < v.size(); ++j) {
    const double prev = v[j - 1] - v[j - 2];
    const double next = v[j] - v[j - 1];
    if (next > prev + slack) return Violation{j - 1, prev, next};
  }
  return std::nullopt;
}

// Records the first violation on the row. `axis` names the varied parameter
// and `values` its grid so the counterexample carries both neighbours.
void record(PropertyRow& row, const std::optional<Violation>& v, const Params& params,
            const std::string& axis, const std::vector<double>& values, const std::string& what) {
  if (!v || !row.pass) return;
  row.pass = false;
  row.counterexample = params;
  row.counterexample[axis + "_before"] = values[v->at - 1];
  row.counterexample[axis + "_after"] = values[std::min(v->at, values.size() - 1)];
  row.counterexample[what + "_before"] = v->before;
  row.counterexample[what + "_after"] = v->after;
}

std::vector<double> alpha_line(double beta, int points) {
  std::vector<double> out;
  for (int k = 0; k < points; ++k) out.push_back(beta + (1.0 - 2.0 * beta) * k / (points - 1));
  return out;
}

std::vector<std::pair<double, double>> representative_pairs(const MonotonicityGrid& g) {
  std::vector<std::pair<double, double>> out;
  for (double beta : g.betas) {
    for (double alpha : {beta, 0.5, 1.0 - beta}) {
      if (alpha < beta || alpha + beta > 1.0) continue;
      if (std::find(out.begin(), out.end(), std::make_pair(alpha, beta)) == out.end()) {
        out.emplace_back(alpha, beta);
      }
    }
  }
  return out;
}

std::vector<int> adaptive_boundaries(int t0, int tau, int max_block) {
  std::vector<int> out;
  for (int m = 1; m <= max_block && t0 - (m - 1) * tau >= 0; ++m) out.push_back(m);
  return out;
}

std::vector<double> over_blocks(int from, int to, const std::function<double(int)>& f) {
  std::vector<double> out;
  for (int i = from; i <= to; ++i) out.push_back(f(i));
  return out;
}

std::vector<double> block_axis(int from, int to) {
  std::vector<double> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

void add_alpha_tasks(const MonotonicityGrid& g, std::vector<Task>& tasks) {
  for (double beta : g.betas) {
    for (int s : g.block_lengths) {
      tasks.push_back([=] {
        const auto alphas = alpha_line(beta, g.alpha_points);
        std::vector<DynamicsParams> params;
        for (double a : alphas) params.push_back(validate_params(a, beta));
        const Params base{{"beta", beta}, {"s", double(s)}, {"t0", double(s)}};
        const std::string line = describe(base) + ",i=1.." + std::to_string(g.max_block);

        PropertyRow fixed = new_row("alpha_monotonicity_fixed", line);
        PropertyRow dec = new_row("alpha_monotonicity_decreasing", line + ",kappa=2");
        for (int i = 1; i <= g.max_block; ++i) {
          std::vector<double> u1, u2;
          for (const auto& p : params) {
            u1.push_back(upsilon_fixed(p, s, s, i).upsilon);
            u2.push_back(upsilon_decreasing(p, s, s, 2.0, i).upsilon);
          }
          Params at = base;
          at["i"] = i;
          record(fixed, find_violation(u1, Direction::NonIncreasing, g.slack), at, "alpha", alphas, "upsilon");
          record(fixed, find_violation(u1, Direction::StrictlyDecreasing, 0.0), at, "alpha", alphas, "upsilon");
          at["kappa"] = 2.0;
          record(dec, find_violation(u2, Direction::NonIncreasing, g.slack), at, "alpha", alphas, "upsilon");
        }

        std::vector<PropertyRow> rows{fixed, dec};
        for (int tau : g.taus) {
          for (int m : adaptive_boundaries(s, tau, 4)) {
            Params at = base;
            at["tau"] = tau;
            at["m_ad"] = m;
            PropertyRow ada = new_row("alpha_monotonicity_adaptive",
                            describe(at) + ",i=1.." + std::to_string(g.max_block));
            for (int i = 1; i <= g.max_block; ++i) {
              std::vector<double> u3;
              for (const auto& p : params) u3.push_back(upsilon_adaptive(p, s, s, tau, i, m).upsilon);
              at["i"] = i;
              record(ada, find_violation(u3, Direction::NonIncreasing, g.slack), at, "alpha", alphas,
                     "upsilon");
            }
            rows.push_back(ada);
          }
        }
        return rows;
      });
    }
  }
}

void add_block_tasks(const MonotonicityGrid& g, std::vector<Task>& tasks) {
  for (const auto& [alpha, beta] : representative_pairs(g)) {
    for (int s : g.block_lengths) {
      tasks.push_back([=] {
        const auto p = validate_params(alpha, beta);
        const Params base{{"alpha", alpha}, {"beta", beta}, {"s", double(s)}, {"t0", double(s)}};
        const std::string prop = "i_monotonicity_concavity";
        std::vector<PropertyRow> rows;

        PropertyRow fixed = new_row(prop, "fixed," + describe(base));
        const auto u1 = over_blocks(0, g.max_block, [&](int i) { return upsilon_fixed(p, s, s, i).upsilon; });
        record(fixed, find_violation(u1, Direction::NonDecreasing, g.slack), base, "i",
               block_axis(0, g.max_block), "upsilon");
        rows.push_back(fixed);

        const int m_d = decreasing_schedule(s, 2.0).m_d;
        Params dec_base = base;
        dec_base["kappa"] = 2.0;
        dec_base["m_d"] = m_d;
        auto u2 = [&](int i) { return upsilon_decreasing(p, s, s, 2.0, i).upsilon; };
        PropertyRow dec_t = new_row(prop, "decreasing_transient," + describe(dec_base));
        const auto transient = over_blocks(0, m_d, u2);
        record(dec_t, find_violation(transient, Direction::NonDecreasing, g.slack), dec_base, "i",
               block_axis(0, m_d), "upsilon");
        record(dec_t, find_convex_kink(transient, g.slack), dec_base, "i", block_axis(0, m_d),
               "forward_difference");
        rows.push_back(dec_t);
        PropertyRow dec_s = new_row(prop, "decreasing_steady," + describe(dec_base));
        record(dec_s, find_violation(over_blocks(m_d, g.max_block, u2), Direction::NonIncreasing, g.slack),
               dec_base, "i", block_axis(m_d, g.max_block), "upsilon");
        rows.push_back(dec_s);

        for (int tau : g.taus) {
          for (int m : adaptive_boundaries(s, tau, 4)) {
            if (m < 2) continue;
            Params at = base;
            at["tau"] = tau;
            at["m_ad"] = m;
            PropertyRow ada = new_row(prop, "adaptive_transient," + describe(at));
            const auto u3 = over_blocks(0, m, [&](int i) { return upsilon_adaptive(p, s, s, tau, i, m).upsilon; });
            record(ada, find_violation(u3, Direction::NonDecreasing, g.slack), at, "i", block_axis(0, m), "upsilon");
            record(ada, find_convex_kink(u3, g.slack), at, "i", block_axis(0, m), "forward_difference");
            rows.push_back(ada);
          }
        }
        return rows;
      });
    }
  }
}

void add_parameter_tasks(const MonotonicityGrid& g, std::vector<Task>& tasks) {
  for (const auto& [alpha, beta] : representative_pairs(g)) {
    tasks.push_back([=] {
      const auto p = validate_params(alpha, beta);
      std::vector<PropertyRow> rows;
      for (int s : g.block_lengths) {
        const Params base{{"alpha", alpha}, {"beta", beta}, {"s", double(s)}};
        PropertyRow row = new_row("t0_monotonicity", describe(base) + ",t0=0..s,i=1.." + std::to_string(g.max_block));
        const auto t0s = block_axis(0, s);
        for (int i = 1; i <= g.max_block; ++i) {
          std::vector<double> u;
          for (int t0 = 0; t0 <= s; ++t0) u.push_back(upsilon_fixed(p, s, t0, i).upsilon);
          Params at = base;
          at["i"] = i;
          record(row, find_violation(u, Direction::NonDecreasing, g.slack), at, "t0", t0s, "upsilon");
        }
        rows.push_back(row);

        PropertyRow tau_row = new_row("tau_monotonicity", describe(base) + ",t0=s,transient");
        for (int i = 1; i <= g.max_block; ++i) {
          std::vector<double> taus, u;
          for (int tau : g.taus) {
            if (s - (i - 1) * tau < 0) continue;
            taus.push_back(tau);
            u.push_back(upsilon_adaptive(p, s, s, tau, i, i).upsilon);
          }
          Params at = base;
          at["i"] = i;
          at["t0"] = s;
          record(tau_row, find_violation(u, Direction::NonIncreasing, g.slack), at, "tau", taus, "upsilon");
        }
        rows.push_back(tau_row);
      }

      const int s = std::max(g.kappa_t0, *std::max_element(g.block_lengths.begin(), g.block_lengths.end()));
      int horizon = g.max_block;
      for (double kappa : g.kappas) horizon = std::min(horizon, decreasing_schedule(g.kappa_t0, kappa).m_d);
      const Params base{{"alpha", alpha}, {"beta", beta}, {"s", double(s)}, {"t0", double(g.kappa_t0)}};
      PropertyRow kappa_row = new_row("kappa_monotonicity", describe(base) + ",i=1.." + std::to_string(horizon));
      for (int i = 1; i <= horizon; ++i) {
        std::vector<double> u;
        for (double kappa : g.kappas) u.push_back(upsilon_decreasing(p, s, g.kappa_t0, kappa, i).upsilon);
        Params at = base;
        at["i"] = i;
        record(kappa_row, find_violation(u, Direction::NonIncreasing, g.slack), at, "kappa", g.kappas,
               "upsilon");
      }
      rows.push_back(kappa_row);
      return rows;
    });
  }
}

std::vector<PropertyRow> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<PropertyRow>> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { results[i] = tasks[i](); });
  std::vector<PropertyRow> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

}  // namespace

SuiteReport monotonicity_suite(const MonotonicityGrid& grid, int jobs) {
  std::vector<Task> tasks;
  add_alpha_tasks(grid, tasks);
  add_block_tasks(grid, tasks);
  add_parameter_tasks(grid, tasks);
  SuiteReport report{"monotonicity", run_tasks(tasks, jobs)};
  const auto& order = monotonicity_properties();
  std::stable_sort(report.rows.begin(), report.rows.end(), [&](const PropertyRow& a, const PropertyRow& b) {
    return std::find(order.begin(), order.end(), a.property) <
           std::find(order.begin(), order.end(), b.property);
  });
  return report;
}

namespace {

struct Tuple {
  double alpha, beta, x0, u0;
  int s, t0_fixed, t0_dec, t0_ada, tau;
  double kappa, x_drift;
  AdaptiveBoundary boundary;
};

Tuple sample_tuple(Rng& rng) {
  Tuple t{};
  t.beta = rng.uniform(0.01, 0.5);
  t.alpha = rng.uniform(t.beta, 1.0 - t.beta);
  t.x0 = rng.uniform(-1.0, 1.0);
  t.u0 = rng.uniform(-1.0, 1.0);
  auto pick = [&](int lo, int hi) {
    return lo + std::min(hi - lo, static_cast<int>(rng.uniform01() * (hi - lo + 1)));
  };
  t.s = pick(1, 12);
  t.t0_fixed = pick(0, t.s);
  const int base = pick(2, 4);
  t.kappa = base;
  int power = 1;
  std::vector<int> powers{1};
  while (power * base <= t.s) powers.push_back(power *= base);
  t.t0_dec = powers[pick(0, static_cast<int>(powers.size()) - 1)];
  return t;
}

// The adaptive closed form only describes schedules whose reductions occupy
// a prefix of blocks; redraw the adaptive constants until the measured
// schedule has that shape. Returns the number of redraws.
int sample_adaptive(Rng& rng, Tuple& t, int blocks) {
  const auto p = validate_params(t.alpha, t.beta);
  auto pick = [&](int lo, int hi) {
    return lo + std::min(hi - lo, static_cast<int>(rng.uniform01() * (hi - lo + 1)));
  };
  for (int redraws = 0;; ++redraws) {
    t.t0_ada = pick(0, t.s);
    t.tau = pick(1, std::max(1, t.t0_ada));
    t.x_drift = rng.uniform(0.01, 0.5);
    if (const auto b = measure_adaptive_boundary(p, t.s, t.t0_ada, t.tau, t.x_drift, t.x0, t.u0, blocks)) {
      t.boundary = *b;
      return redraws;
    }
  }
}

Params tuple_params(const Tuple& t) {
  return {{"alpha", t.alpha}, {"beta", t.beta}, {"x0", t.x0}, {"u0", t.u0}, {"s", double(t.s)}};
}

struct TupleResult {
  std::optional<Params> fixed, decreasing, adaptive, convexity, bounds;
};

void check_weight(const BlockWeight& w, double closed, double brute, double tol, double conv_tol,
                  const Params& where, std::optional<Params>& eq_slot, TupleResult& out) {
  if (!eq_slot && !(std::abs(closed - brute) <= tol)) {
    eq_slot = where;
    (*eq_slot)["closed_form"] = closed;
    (*eq_slot)["recursion"] = brute;
  }
  if (!out.convexity && !(std::abs(w.gamma + w.upsilon - 1.0) <= conv_tol)) {
    out.convexity = where;
    (*out.convexity)["gamma"] = w.gamma;
    (*out.convexity)["upsilon"] = w.upsilon;
  }
  if (!out.bounds && !(w.upsilon >= 0.0 && w.upsilon <= 1.0 && w.gamma >= 0.0 && w.gamma <= 1.0 + conv_tol)) {
    out.bounds = where;
    (*out.bounds)["gamma"] = w.gamma;
    (*out.bounds)["upsilon"] = w.upsilon;
  }
}

TupleResult check_tuple(const Tuple& t, const EquivalenceGrid& g) {
  TupleResult out;
  const auto p = validate_params(t.alpha, t.beta);
  const BlockGeometry geo{t.s, std::max(1, g.max_block)};
  const AgentPolicyState fixed({AgentPolicyKind::Fixed, t.t0_fixed}, geo);
  const AgentPolicyState dec({AgentPolicyKind::Decreasing, t.t0_dec, t.kappa}, geo);
  const AgentPolicyState ada({AgentPolicyKind::AdaptiveDecreasing, t.t0_ada, 2.0, t.tau, t.x_drift}, geo);
  const Params base = tuple_params(t);

  for (int i = 0; i <= g.max_block; ++i) {
    Params where = base;
    where["i"] = i;

    const auto wf = upsilon_fixed(p, t.s, t.t0_fixed, i);
    where["t0"] = t.t0_fixed;
    check_weight(wf, wf.opinion(t.x0, t.u0), brute_force_block_opinion(p, fixed, t.u0, t.x0, i),
                 g.tolerance, g.convexity_tolerance, where, out.fixed, out);

    const auto wd = upsilon_decreasing(p, t.s, t.t0_dec, t.kappa, i);
    where["t0"] = t.t0_dec;
    where["kappa"] = t.kappa;
    check_weight(wd, wd.opinion(t.x0, t.u0), brute_force_block_opinion(p, dec, t.u0, t.x0, i),
                 g.tolerance, g.convexity_tolerance, where, out.decreasing, out);
    where.erase("kappa");

    const auto wa = upsilon_adaptive(p, t.s, t.t0_ada, t.tau, i, t.boundary);
    where["t0"] = t.t0_ada;
    where["tau"] = t.tau;
    where["x_drift"] = t.x_drift;
    where["m_ad"] = t.boundary.m_ad;
    check_weight(wa, wa.opinion(t.x0, t.u0), brute_force_block_opinion(p, ada, t.u0, t.x0, i),
                 g.tolerance, g.convexity_tolerance, where, out.adaptive, out);
  }
  return out;
}

}  // namespace

SuiteReport oracle_equivalence_suite(const EquivalenceGrid& grid, int jobs) {
  Rng rng(grid.seed);
  std::vector<Tuple> tuples;
  int redraws = 0;
  for (int k = 0; k < grid.tuples; ++k) {
    tuples.push_back(sample_tuple(rng));
    redraws += sample_adaptive(rng, tuples.back(), grid.max_block);
  }
  std::vector<TupleResult> results(tuples.size());
  parallel_for(tuples.size(), jobs, [&](std::size_t k) { results[k] = check_tuple(tuples[k], grid); });

  const std::string line = "tuples=" + std::to_string(grid.tuples) + ",i=0.." + std::to_string(grid.max_block) +
                           ",seed=" + std::to_string(grid.seed);
  auto row = [&](const std::string& property, std::optional<Params> TupleResult::*slot,
                 const std::string& note = "") {
    PropertyRow r = new_row(property, line + note);
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results[k].*slot) {
        r.pass = false;
        r.counterexample = *(results[k].*slot);
        r.counterexample["tuple"] = static_cast<double>(k);
        break;
      }
    }
    return r;
  };
  SuiteReport report{"oracle-equivalence", {}};
  report.rows.push_back(row("oracle_equivalence_fixed", &TupleResult::fixed));
  report.rows.push_back(row("oracle_equivalence_decreasing", &TupleResult::decreasing));
  report.rows.push_back(row("oracle_equivalence_adaptive", &TupleResult::adaptive,
                            ",adaptive_redraws=" + std::to_string(redraws)));
  report.rows.push_back(row("convexity", &TupleResult::convexity));
  report.rows.push_back(row("weight_bounds", &TupleResult::bounds));
  return report;
}

SuiteReport limits_suite(int jobs) {
  constexpr double kLambda = 0.5;
  constexpr double kDrift = 0.1;
  const auto p = validate_params(0.25, 0.2);
  const std::vector<AgentPolicyKind> kinds{AgentPolicyKind::Fixed, AgentPolicyKind::Decreasing,
                                           AgentPolicyKind::AdaptiveDecreasing};
  std::vector<OpinionTrace> traces(kinds.size() + 1);
  parallel_for(traces.size(), jobs, [&](std::size_t j) {
    RunSpec spec;
    spec.x0 = -1.0;
    spec.geometry = BlockGeometry{8, 1250};
    spec.platform.u0 = 1.0;
    spec.rewards = RewardFns{RewardFn::constant(), RewardFn::constant()};
    if (j < kinds.size()) {
      spec.agent = AgentPolicyConfig{kinds[j], 8, 2.0, 3, kDrift};
    } else {
      spec.agent = AgentPolicyConfig{AgentPolicyKind::AdaptiveDecreasing, 8, 2.0, 8, 1e-9};
    }
    traces[j] = run(spec);
  });

  const std::string line = "alpha=0.25,beta=0.2,s=t0=8,x0=-1,u0=1,K=10000";
  SuiteReport report{"limits", {}};
  auto add = [&](const std::string& property, double value, Interval target, double tol) {
    PropertyRow r = new_row(property, line);
    if (!target.contains(value, tol)) {
      r.pass = false;
      r.counterexample = {{"value", value}, {"target_lo", target.lo}, {"target_hi", target.hi}, {"tolerance", tol}};
    }
    report.rows.push_back(r);
  };
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    const auto target = limit_opinion(kinds[j], p, -1.0, 1.0, kDrift);
    const std::string name = std::string("limit_opinion_") + std::string(to_string(kinds[j]));
    add(name, traces[j].final_x, target, kinds[j] == AgentPolicyKind::AdaptiveDecreasing ? 1e-9 : 1e-6);
  }
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    const auto target = limit_agent_utility(kinds[j], p, -1.0, 1.0, kLambda);
    const double u = agent_utility(traces[j], RewardFn::constant(), kLambda);
    add(std::string("limit_utility_") + std::string(to_string(kinds[j])), u, target,
        kinds[j] == AgentPolicyKind::AdaptiveDecreasing ? 1e-9 : 1e-2);
  }
  add("adaptive_reduction", traces.back().final_x, Interval{-1.0, -1.0}, 1e-6);
  return report;
}

std::vector<SuiteReport> run_suites(const std::string& name, int jobs) {
  if (name == "oracle-equivalence") return {oracle_equivalence_suite({}, jobs)};
  if (name == "monotonicity") return {monotonicity_suite({}, jobs)};
  if (name == "limits") return {limits_suite(jobs)};
  if (name == "all") {
    return {oracle_equivalence_suite({}, jobs), monotonicity_suite({}, jobs), limits_suite(jobs)};
  }
  throw Error(ErrorKind::InvalidConfig, "unknown suite '" + name +
                                            "' (expected oracle-equivalence, monotonicity, limits or all)");
}

}  // namespace reactsim
