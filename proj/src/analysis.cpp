#include "lowsnr/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "lowsnr/solver.hpp"
#include "lowsnr/specfun.hpp"

namespace lowsnr {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInvE = 0.367879441171442321595523770161460867;
}  // namespace

double capacity_at(Snr a, double x1) {
  if (!(x1 > 1.0)) throw std::domain_error("capacity_at: needs x1 > 1");
  const double av = a.linear();
  const double xsq = x1 * x1;
  if (!(av < xsq)) throw std::domain_error("capacity_at: needs a < x1^2");
  const double inv = 1.0 / xsq;
  const double csc = 1.0 / std::sin(kPi * inv);
  return av - av * std::log1p(xsq) * inv -
         std::pow(av, 1.0 + inv) * kPi * csc *
             std::pow(1.0 / (xsq + xsq * xsq), inv) / (1.0 + xsq);
}

double penalty_per_snr(Snr a, double x1) {
  if (!(x1 > 1.0)) throw std::domain_error("penalty_per_snr: needs x1 > 1");
  const double av = a.linear();
  const double xsq = x1 * x1;
  if (!(av < xsq)) throw std::domain_error("penalty_per_snr: needs a < x1^2");
  const double inv = 1.0 / xsq;
  const double csc = 1.0 / std::sin(kPi * inv);
  return std::log1p(xsq) * inv +
         std::pow(av, inv) * kPi * csc *
             std::pow(1.0 / (xsq + xsq * xsq), inv) / (1.0 + xsq);
}

CapacityPoint capacity_low_snr(Snr a, double a_max) {
  const SolveResult s = solve_x1(a, a_max);
  const double av = a.linear();
  CapacityPoint p;
  p.a = av;
  p.x1 = s.value;
  p.p1 = av / (s.value * s.value);
  p.capacity = capacity_at(a, s.value);
  p.delta = av - p.capacity;
  p.delta_over_a = p.delta / av;
  p.penalty = penalty_per_snr(a, s.value);
  p.energy_per_nat = av / p.capacity;
  p.branch = s.branch;
  p.method = CapacityPoint::Method::FixedPoint;
  return p;
}

double x1_upper_bound(Snr a) {
  const LowSnrConstants& k = constants();
  const double av = a.linear();
  if (!(av <= k.a0))
    throw std::domain_error("x1_upper_bound: only valid for a <= a0");
  return std::sqrt(k.xi0 - std::log(av));
}

namespace {

// phi(rho) checked into the k=-1 Lambert domain; the check fails when a is
// close enough to a0 that rho = sqrt(1 + ln(1/a)) falls at or below x0.
double phi_checked(double x) {
  const double p = phi(x);
  if (!(p > -kInvE && p < 0.0))
    throw std::domain_error(
        "x1_lower_bound: phi argument outside (-1/e, 0); a too close to a0");
  return p;
}

}  // namespace

double x1_lower_bound_one_step(Snr a) {
  const LowSnrConstants& k = constants();
  if (!(a.linear() < k.a0))
    throw std::domain_error("x1_lower_bound_one_step: needs a < a0");
  const double rho = std::sqrt(1.0 + std::log(1.0 / a.linear()));
  return rho / std::sqrt(-lambert_w(BranchK::MinusOne, phi_checked(rho)));
}

double x1_lower_bound(Snr a) {
  const LowSnrConstants& k = constants();
  if (!(a.linear() < k.a0))
    throw std::domain_error("x1_lower_bound: needs a < a0");
  const double rho = std::sqrt(1.0 + std::log(1.0 / a.linear()));
  const double p_rho = phi_checked(rho);
  const double inner = rho / std::sqrt(-std::log(-p_rho));
  return rho / std::sqrt(-lambert_w(BranchK::MinusOne, phi_checked(inner)));
}

BoundsPoint capacity_bounds(Snr a) {
  const LowSnrConstants& k = constants();
  if (!(a.linear() < k.a0))
    throw std::domain_error("capacity_bounds: needs a < a0");
  BoundsPoint b;
  b.a = a.linear();
  b.x1_lower = x1_lower_bound(a);
  b.x1_upper = x1_upper_bound(a);
  b.c_upper = capacity_at(a, b.x1_lower);
  b.c_lower = capacity_at(a, b.x1_upper);
  return b;
}

}  // namespace lowsnr
