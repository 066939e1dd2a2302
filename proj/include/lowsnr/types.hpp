#pragma once

#include <cmath>
#include <stdexcept>

namespace lowsnr {

/// Lambert W branch selector.  MinusOne is only defined on [-1/e, 0);
/// Principal on [-1/e, inf).  The two branches meet at z = -1/e with value -1.
enum class BranchK { Principal, MinusOne };

inline const char* to_string(BranchK k) {
  return k == BranchK::Principal ? "principal" : "minus_one";
}

/// Linear-scale SNR a = P*sigma_h^2/sigma_w^2, with dB helpers (a_dB = 10*log10(a)).
class Snr {
 public:
  explicit Snr(double linear) : a_(linear) {
    if (!(linear > 0.0) || !std::isfinite(linear))
      throw std::domain_error("Snr: linear value must be positive and finite");
  }
  static Snr from_db(double db) { return Snr(std::pow(10.0, db / 10.0)); }
  double linear() const { return a_; }
  double db() const { return 10.0 * std::log10(a_); }

 private:
  double a_;
};

/// Numeric value with an attached absolute error estimate and work counter.
struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 1;
};

/// Result of a 1-d solve (root or maximizer).  `objective` carries the attained
/// function value for maximizations and the achieved SNR for inverse solves.
struct SolveResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
  BranchK branch = BranchK::MinusOne;
  double objective = 0.0;
};

/// Physical channel parameters before normalization.
struct ChannelParams {
  double sigma_h_sq = 1.0;  // fading variance
  double sigma_w_sq = 1.0;  // noise variance
  double power = 0.0;       // average power constraint

  ChannelParams() = default;
  ChannelParams(double sh2, double sw2, double p)
      : sigma_h_sq(sh2), sigma_w_sq(sw2), power(p) {
    if (!(sh2 > 0.0) || !(sw2 > 0.0) || !(p >= 0.0))
      throw std::domain_error("ChannelParams: variances must be positive, power nonnegative");
  }
  double snr() const { return power * sigma_h_sq / sigma_w_sq; }
};

/// Two-point input law: amplitude x1 with probability p1, zero otherwise.
struct OnOffInput {
  double x1;
  double p1;

  OnOffInput(double x1_, double p1_) : x1(x1_), p1(p1_) {
    if (!(x1_ > 0.0)) throw std::domain_error("OnOffInput: x1 must be positive");
    if (!(p1_ >= 0.0 && p1_ <= 1.0))
      throw std::domain_error("OnOffInput: p1 must lie in [0, 1]");
  }

  /// Input meeting the average power constraint with equality: p1*x1^2 = a.
  static OnOffInput for_snr(double x1_, Snr a) {
    double p1_ = a.linear() / (x1_ * x1_);
    if (p1_ > 1.0) throw std::domain_error("OnOffInput::for_snr: requires x1 >= sqrt(a)");
    return OnOffInput(x1_, p1_);
  }

  double p0() const { return 1.0 - p1; }
  double average_power() const { return p1 * x1 * x1; }
};

/// alpha = 1 + x1^2 and beta = p1/((1-p1)*alpha); beta is undefined at p1 = 1.
struct AlphaBeta {
  double alpha;
  double beta;

  static AlphaBeta of(const OnOffInput& in) {
    if (in.p1 >= 1.0)
      throw std::domain_error("AlphaBeta: beta is undefined for p1 = 1");
    double alpha = 1.0 + in.x1 * in.x1;
    return {alpha, in.p1 / ((1.0 - in.p1) * alpha)};
  }
};

/// Full capacity record at one SNR point.
struct CapacityPoint {
  enum class Method { FixedPoint, NumericMax, BoundUB, BoundLB };

  double a = 0.0;
  double x1 = 0.0;
  double p1 = 0.0;
  double capacity = 0.0;        // nats per symbol
  double delta = 0.0;           // a - capacity
  double delta_over_a = 0.0;
  double penalty = 0.0;         // non-coherence penalty per SNR
  double energy_per_nat = 0.0;  // exact form a/C
  BranchK branch = BranchK::MinusOne;
  Method method = Method::FixedPoint;
};

inline const char* to_string(CapacityPoint::Method m) {
  switch (m) {
    case CapacityPoint::Method::FixedPoint: return "fixed_point";
    case CapacityPoint::Method::NumericMax: return "numeric_max";
    case CapacityPoint::Method::BoundUB: return "bound_ub";
    case CapacityPoint::Method::BoundLB: return "bound_lb";
  }
  return "?";
}

/// Mass-point and capacity bounds at one SNR.
struct BoundsPoint {
  double a = 0.0;
  double x1_lower = 0.0;
  double x1_upper = 0.0;
  double c_upper = 0.0;  // capacity curve evaluated at x1_lower
  double c_lower = 0.0;  // capacity curve evaluated at x1_upper
};

}  // namespace lowsnr
