#pragma once

#include "lowsnr/types.hpp"

namespace lowsnr {

/// Capacity curve at mass point x1 (power constraint active):
///   C(a, x1) = a - a ln(1+x1^2)/x1^2
///              - a^{1+1/x1^2} pi csc(pi/x1^2) (1/(x1^2+x1^4))^{1/x1^2} / (1+x1^2).
/// Requires x1 > 1 and a < x1^2; value lies in [0, a).
double capacity_at(Snr a, double x1);

/// Fraction of first-order capacity lost to channel ignorance:
///   ln(1+x1^2)/x1^2 + a^{1/x1^2} pi csc(pi/x1^2) (1/(x1^2+x1^4))^{1/x1^2} / (1+x1^2),
/// identical to (a - capacity_at(a, x1))/a.  The coherent capacity enters only
/// through its first-order form a.
double penalty_per_snr(Snr a, double x1);

/// Solve the mass point at SNR a and assemble the full record: capacity,
/// sub-linear gap delta = a - C, delta/a, penalty, exact energy per nat a/C.
CapacityPoint capacity_low_snr(Snr a, double a_max = 0.1);

/// Mass-point upper bound sqrt(xi0 - ln a); valid for a <= a0.
double x1_upper_bound(Snr a);

/// One ladder step of the mass-point lower bound, with rho = sqrt(1 + ln(1/a)):
///   rho / sqrt(-W(-1, phi(rho))).
/// Requires phi(rho) in (-1/e, 0), which fails for a too close to a0; that is
/// reported as a domain error, never clamped.
double x1_lower_bound_one_step(Snr a);

/// Refined (two-step) mass-point lower bound:
///   rho / sqrt(-W(-1, phi(rho / sqrt(-ln(-phi(rho)))))).
/// Sits between the one-step bound and the true mass point.
double x1_lower_bound(Snr a);

/// Bundle the x1 bounds with the capacity curve evaluated at each:
/// c_upper = capacity_at(a, x1_lower), c_lower = capacity_at(a, x1_upper).
BoundsPoint capacity_bounds(Snr a);

}  // namespace lowsnr
