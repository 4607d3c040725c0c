#include "reactsim/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "reactsim/error.hpp"

namespace reactsim {

DynamicsParams::DynamicsParams(double alpha, double beta)
    : alpha_(alpha),
      beta_(beta),
      z_(alpha + beta),
      b_(beta / (alpha + beta)),
      eta_(alpha / (1.0 - beta)) {}

DynamicsParams validate_params(double alpha, double beta) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidParams,
                why + " (alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
  };
  if (!std::isfinite(alpha) || !std::isfinite(beta)) fail("alpha and beta must be finite");
  if (alpha < 0.0 || alpha > 1.0) fail("alpha must lie in [0,1]");
  if (beta < 0.0 || beta > 1.0) fail("beta must lie in [0,1]");
  if (beta <= 0.0) fail("beta must be strictly positive");
  if (alpha + beta <= 0.0 || alpha + beta > 1.0) fail("alpha + beta must lie in (0,1]");
  if (alpha < beta) fail("alpha must be >= beta");
  return DynamicsParams(alpha, beta);
}

double step(const DynamicsParams& params, double x0, double x_prev, double u_prev,
            bool clicked) {
  // Written as a deviation from x0 so that x0 is an exact fixed point.
  double next;
  if (clicked) {
    next = x0 + params.beta() * (x_prev - x0) + (1.0 - params.z()) * (u_prev - x0);
    assert(next >= std::min({x0, x_prev, u_prev}) - 1e-12 &&
           next <= std::max({x0, x_prev, u_prev}) + 1e-12);
  } else {
    next = x0 + params.b() * (x_prev - x0);
    assert(next >= std::min(x0, x_prev) - 1e-12 && next <= std::max(x0, x_prev) + 1e-12);
  }
  return next;
}

}  // namespace reactsim
