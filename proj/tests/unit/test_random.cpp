#include <cmath>

#include "doctest.h"
#include "reactsim/error.hpp"
#include "reactsim/random.hpp"

using namespace reactsim;

TEST_CASE("uniform draws stay in range and are seeded") {
  Rng a(5), b(5);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = a.uniform01();
    CHECK(u == b.uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("truncated gaussian respects its support") {
  Rng rng(11);
  const auto g = Distribution::gaussian(0.0, 0.5);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double v = g.sample(rng);
    CHECK(std::abs(v) <= 1.0);
    sum += v;
    sq += v * v;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::sqrt(sq / n) < 0.5);
  CHECK(std::sqrt(sq / n) > 0.4);
}

TEST_CASE("point mass and validation") {
  Rng rng(0);
  CHECK(Distribution::point(0.25).sample(rng) == 0.25);
  CHECK_THROWS_AS(validate_distribution(Distribution::point(1.5)), Error);
  CHECK_THROWS_AS(validate_distribution(Distribution::uniform(0.5, 0.5)), Error);
  CHECK_THROWS_AS(validate_distribution(Distribution::gaussian(0.0, 0.0)), Error);
  CHECK_THROWS_AS(validate_distribution(Distribution::gaussian(5.0, 0.1)), Error);
  CHECK_NOTHROW(validate_distribution(Distribution::gaussian(0.0, 0.5)));
}
