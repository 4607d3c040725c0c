#include "reactsim/random.hpp"

#include <cmath>
#include <numbers>

#include "reactsim/error.hpp"

namespace reactsim {

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::standard_normal() {
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string_view to_string(DistributionKind kind) noexcept {
  switch (kind) {
    case DistributionKind::Uniform: return "uniform";
    case DistributionKind::Gaussian: return "gaussian";
    case DistributionKind::Point: return "point";
  }
  return "unknown";
}

double Distribution::sample(Rng& rng) const {
  switch (kind) {
    case DistributionKind::Uniform:
      return rng.uniform(lo, hi);
    case DistributionKind::Gaussian:
      for (;;) {
        const double v = mean + stddev * rng.standard_normal();
        if (v >= lo && v <= hi) return v;
      }
    case DistributionKind::Point:
      return mean;
  }
  return mean;
}

Distribution Distribution::uniform(double lo, double hi) {
  return Distribution{DistributionKind::Uniform, 0.0, 0.0, lo, hi};
}

Distribution Distribution::gaussian(double mean, double stddev, double lo, double hi) {
  return Distribution{DistributionKind::Gaussian, mean, stddev, lo, hi};
}

Distribution Distribution::point(double value) {
  return Distribution{DistributionKind::Point, value, 0.0, value, value};
}

void validate_distribution(const Distribution& dist) {
  if (!(dist.lo >= -1.0 && dist.hi <= 1.0 && dist.lo <= dist.hi)) {
    throw Error(ErrorKind::InvalidParams, "distribution support must be a sub-interval of [-1,1]");
  }
  switch (dist.kind) {
    case DistributionKind::Uniform:
      if (!(dist.lo < dist.hi)) throw Error(ErrorKind::InvalidParams, "uniform support is empty");
      break;
    case DistributionKind::Gaussian:
      if (!(dist.lo < dist.hi)) throw Error(ErrorKind::InvalidParams, "gaussian support is empty");
      if (!(dist.stddev > 0.0 && std::isfinite(dist.stddev))) {
        throw Error(ErrorKind::InvalidParams, "gaussian stddev must be > 0");
      }
      if (!std::isfinite(dist.mean)) throw Error(ErrorKind::InvalidParams, "gaussian mean must be finite");
      // Rejection sampling needs non-negligible mass inside [lo, hi].
      if (dist.mean < dist.lo - 4.0 * dist.stddev || dist.mean > dist.hi + 4.0 * dist.stddev) {
        throw Error(ErrorKind::InvalidParams, "gaussian has almost no mass inside its truncation");
      }
      break;
    case DistributionKind::Point:
      if (!(dist.mean >= -1.0 && dist.mean <= 1.0)) {
        throw Error(ErrorKind::InvalidParams, "point mass must lie in [-1,1]");
      }
      break;
  }
}

}  // namespace reactsim
