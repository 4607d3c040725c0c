#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "reactsim/config.hpp"
#include "reactsim/engine.hpp"
#include "reactsim/error.hpp"
#include "reactsim/oracle.hpp"
#include "reactsim/payoffs.hpp"
#include "reactsim/population.hpp"
#include "reactsim/verify.hpp"

namespace py = pybind11;
using namespace reactsim;

namespace {

DynamicsParams params_of(double alpha, double beta) { return validate_params(alpha, beta); }

py::dict trace_dict(const OpinionTrace& t, const RewardFns& rewards, double lambda) {
  py::list x, u, clicked, block_x, block_clicks;
  for (const auto& s : t.steps) {
    x.append(s.x);
    u.append(s.u);
    clicked.append(s.clicked);
  }
  for (const auto& b : t.blocks) {
    block_x.append(b.x_block);
    block_clicks.append(b.clicks);
  }
  py::dict d;
  d["policy"] = std::string(to_string(t.meta.agent.kind));
  d["x"] = x;
  d["u"] = u;
  d["clicked"] = clicked;
  d["block_x"] = block_x;
  d["block_clicks"] = block_clicks;
  d["final_x"] = t.final_x;
  d["agent_utility"] = agent_utility(t, rewards.agent, lambda);
  d["platform_utility"] = platform_payoff(t, rewards.platform);
  return d;
}

py::list run_config(const std::string& text) {
  const auto cfg = parse_config(text);
  validate_config(cfg);
  py::list out;
  for (const auto& policy : cfg.policies()) {
    RunSpec spec = cfg.scenario;
    spec.agent = policy;
    out.append(trace_dict(run(spec), spec.rewards, cfg.lambda));
  }
  return out;
}

py::list sweep_config(const std::string& text, int jobs) {
  const auto cfg = parse_config(text);
  validate_config(cfg);
  py::list out;
  for (const auto& r : run_sweep(sweep_spec(cfg), jobs)) {
    py::dict d;
    d["value"] = r.value;
    d["policy"] = std::string(to_string(r.policy));
    d["final_opinion"] = r.final_opinion;
    d["final_drift"] = r.final_drift;
    d["final_agent_utility"] = r.final_agent_utility;
    d["final_platform_utility"] = r.final_platform_utility;
    out.append(d);
  }
  return out;
}

py::dict population_config(const std::string& text, int jobs) {
  const auto cfg = parse_config(text);
  validate_config(cfg);
  const auto result = run_population(population_spec(cfg), jobs);
  py::dict d;
  d["innate"] = result.innate;
  d["recommendation"] = result.recommendation;
  py::dict outcomes;
  for (const auto& o : result.outcomes) {
    py::dict e;
    e["final_opinions"] = o.final_opinions;
    e["distance_to_innate"] = o.distance_to_innate;
    e["distance_to_recommendation"] = o.distance_to_recommendation;
    outcomes[py::str(std::string(to_string(o.agent.kind)))] = e;
  }
  d["outcomes"] = outcomes;
  d["distance_innate_recommendation"] = distribution_distance(result.innate_hist, result.recommendation_hist);
  return d;
}

py::list verify_suite(const std::string& name, int jobs) {
  py::list out;
  for (const auto& rep : run_suites(name, jobs)) {
    py::list rows;
    for (const auto& r : rep.rows) {
      py::dict row;
      row["property"] = r.property;
      row["grid_line"] = r.grid_line;
      row["pass"] = r.pass;
      row["counterexample"] = r.counterexample;
      rows.append(row);
    }
    py::dict d;
    d["suite"] = rep.suite;
    d["pass"] = rep.pass();
    d["rows"] = rows;
    out.append(d);
  }
  return out;
}

py::dict weight_dict(const BlockWeight& w) {
  py::dict d;
  d["gamma"] = w.gamma;
  d["upsilon"] = w.upsilon;
  d["phase"] = w.phase == Phase::Transient ? "transient" : "steady_state";
  d["block_index"] = w.block_index;
  return d;
}

py::tuple interval_tuple(const Interval& iv) { return py::make_tuple(iv.lo, iv.hi); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simulation engine and closed-form oracle for reactive-agent feedback loops.";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&]() { return py::exception<Error>(m, "ReactsimError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "derived",
      [](double alpha, double beta) {
        const auto p = params_of(alpha, beta);
        return py::dict(py::arg("Z") = p.z(), py::arg("B") = p.b(), py::arg("eta") = p.eta());
      },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "step",
      [](double alpha, double beta, double x0, double x_prev, double u_prev, bool clicked) {
        return step(params_of(alpha, beta), x0, x_prev, u_prev, clicked);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("x0"), py::arg("x_prev"), py::arg("u_prev"), py::arg("clicked"));

  m.def(
      "upsilon_fixed",
      [](double alpha, double beta, int s, int t0, int i) {
        return weight_dict(upsilon_fixed(params_of(alpha, beta), s, t0, i));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("s"), py::arg("t0"), py::arg("i"));
  m.def(
      "upsilon_decreasing",
      [](double alpha, double beta, int s, int t0, double kappa, int i) {
        return weight_dict(upsilon_decreasing(params_of(alpha, beta), s, t0, kappa, i));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("s"), py::arg("t0"), py::arg("kappa"), py::arg("i"));
  m.def(
      "upsilon_adaptive",
      [](double alpha, double beta, int s, int t0, int tau, int i, int m_ad, int steady_clicks) {
        return weight_dict(upsilon_adaptive(params_of(alpha, beta), s, t0, tau, i, AdaptiveBoundary{m_ad, steady_clicks}));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("s"), py::arg("t0"), py::arg("tau"), py::arg("i"),
      py::arg("m_ad"), py::arg("steady_clicks") = 0);
  m.def(
      "limit_opinion",
      [](const std::string& kind, double alpha, double beta, double x0, double u0, double x_drift) {
        return interval_tuple(limit_opinion(parse_agent_policy_kind(kind), params_of(alpha, beta), x0, u0, x_drift));
      },
      py::arg("kind"), py::arg("alpha"), py::arg("beta"), py::arg("x0"), py::arg("u0"), py::arg("x_drift") = 0.1);
  m.def(
      "limit_agent_utility",
      [](const std::string& kind, double alpha, double beta, double x0, double u0, double lambda) {
        return interval_tuple(
            limit_agent_utility(parse_agent_policy_kind(kind), params_of(alpha, beta), x0, u0, lambda));
      },
      py::arg("kind"), py::arg("alpha"), py::arg("beta"), py::arg("x0"), py::arg("u0"), py::arg("lambda_"));
  m.def(
      "adaptive_beats_fixed_threshold",
      [](double alpha, double beta, int s, double lambda, double x0, double u0) {
        const auto t = adaptive_beats_fixed_threshold(params_of(alpha, beta), s, lambda, x0, u0);
        py::dict d;
        d["epsilon1"] = t.epsilon1;
        d["threshold"] = t.threshold;
        d["strict_improvement_possible"] = t.strict_improvement_possible;
        d["fixed_limit_utility"] = t.fixed_limit_utility;
        d["skip_one_limit_utility"] = t.skip_one_limit_utility;
        d["skip_one_drift"] = t.skip_one_drift;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("s"), py::arg("lambda_"), py::arg("x0"), py::arg("u0"));

  m.def("preset_names", &preset_names);
  m.def("preset_text", &preset_text, py::arg("name"));
  m.def("resolve_config", [](const std::string& text) { return dump_config(parse_config(text)); }, py::arg("text"));
  m.def("run_config", &run_config, py::arg("text"));
  m.def("sweep_config", &sweep_config, py::arg("text"), py::arg("jobs") = 0);
  m.def("population_config", &population_config, py::arg("text"), py::arg("jobs") = 0);
  m.def("verify", &verify_suite, py::arg("suite") = "all", py::arg("jobs") = 0);
  m.def(
      "wasserstein_samples",
      [](std::vector<double> a, std::vector<double> b) { return wasserstein_samples(std::move(a), std::move(b)); },
      py::arg("a"), py::arg("b"));
}
