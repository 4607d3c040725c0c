#include <cmath>
#include <string>

#include "doctest.h"
#include "reactsim/dynamics.hpp"
#include "reactsim/error.hpp"

using namespace reactsim;

namespace {

std::string rejection(double alpha, double beta) {
  try {
    validate_params(alpha, beta);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("derived constants at the reference parameters") {
  const auto p = validate_params(0.25, 0.2);
  CHECK(p.z() == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(p.b() == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  CHECK(p.eta() == doctest::Approx(0.3125).epsilon(1e-15));
}

TEST_CASE("invalid parameters name the violated constraint") {
  CHECK(rejection(0.2, 0.25).find("alpha must be >= beta") != std::string::npos);
  CHECK(rejection(0.6, 0.5).find("alpha + beta") != std::string::npos);
  CHECK(rejection(0.3, 0.0).find("strictly positive") != std::string::npos);
  CHECK_FALSE(rejection(NAN, 0.1).empty());
  CHECK_FALSE(rejection(-0.1, 0.1).empty());
  CHECK(rejection(0.5, 0.5).empty());
}

TEST_CASE("single step") {
  const auto p = validate_params(0.25, 0.2);
  CHECK(step(p, -1.0, -1.0, 1.0, true) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(step(p, 0.5, 0.5, 0.5, true) == 0.5);
  for (double v : {-1.0, -0.3, 0.0, 0.7, 1.0}) CHECK(step(p, v, v, 1.0, false) == v);
  const double no_click = step(p, -1.0, 0.5, 1.0, false);
  CHECK(no_click == doctest::Approx(-1.0 * 5.0 / 9.0 + 0.5 * 4.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("opinions stay in range without clipping") {
  const auto p = validate_params(0.5, 0.5);
  double x = -1.0;
  for (int k = 0; k < 200; ++k) {
    x = step(p, -1.0, x, 1.0, k % 3 != 0);
    CHECK(in_opinion_range(x));
  }
}
