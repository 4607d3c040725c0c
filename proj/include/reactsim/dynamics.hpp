#pragma once

namespace reactsim {

/// Weights of the opinion update. Only constructible through
/// validate_params, so every instance satisfies
///   0 < beta <= alpha, alpha + beta <= 1.
class DynamicsParams {
 public:
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  /// alpha + beta
  double z() const noexcept { return z_; }
  /// beta / (alpha + beta)
  double b() const noexcept { return b_; }
  /// alpha / (1 - beta)
  double eta() const noexcept { return eta_; }

  friend DynamicsParams validate_params(double alpha, double beta);

 private:
  DynamicsParams(double alpha, double beta);

  double alpha_;
  double beta_;
  double z_;
  double b_;
  double eta_;
};

/// Throws Error(InvalidParams) naming the violated constraint.
DynamicsParams validate_params(double alpha, double beta);

/// One step of the opinion recursion: x_k from (x_0, x_{k-1}, u_{k-1}, clk_{k-1}).
double step(const DynamicsParams& params, double x0, double x_prev, double u_prev,
            bool clicked);

inline bool in_opinion_range(double v) noexcept { return v >= -1.0 && v <= 1.0; }

}  // namespace reactsim
