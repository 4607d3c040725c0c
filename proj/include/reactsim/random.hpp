#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace reactsim {

/// Seeded generator whose output is identical on every conforming toolchain.
/// std::mt19937_64 is bit-specified by the standard; the std:: distributions
/// are not, so the transforms below are written out.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Standard normal via Box-Muller (one draw per call, no caching).
  double standard_normal();

 private:
  std::mt19937_64 engine_;
};

enum class DistributionKind { Uniform, Gaussian, Point };

std::string_view to_string(DistributionKind kind) noexcept;

/// Distribution over [lo, hi] (defaults to [-1, 1]). Gaussian draws outside
/// the truncation interval are rejected and redrawn. Uniform ignores mean
/// and stddev; Point always returns mean.
struct Distribution {
  DistributionKind kind = DistributionKind::Uniform;
  double mean = 0.0;
  double stddev = 0.5;
  double lo = -1.0;
  double hi = 1.0;

  double sample(Rng& rng) const;

  static Distribution uniform(double lo = -1.0, double hi = 1.0);
  static Distribution gaussian(double mean, double stddev, double lo = -1.0, double hi = 1.0);
  static Distribution point(double value);
};

/// Throws Error(InvalidParams) for an empty or out-of-range support.
void validate_distribution(const Distribution& dist);

}  // namespace reactsim
