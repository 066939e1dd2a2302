#pragma once

#include "lowsnr/types.hpp"

namespace lowsnr {

/// Constants of the branch junction: x0 is the point where phi crosses -1/e,
/// a0 the SNR the forward map assigns to it, and xi0 = ln(a0) + x0^2 the
/// intercept of the mass-point upper bound.  Solved once at first use to full
/// double precision; published four-to-six digit values are test expectations
/// only, since downstream bounds need all the precision they can get.
struct LowSnrConstants {
  double x0_sq;
  double a0;
  double xi0;
  double x0() const;
};

/// The process-wide constants, computed on first call and immutable after.
const LowSnrConstants& constants();

/// Auxiliary map whose Lambert image encodes the SNR <-> mass-point relation:
///   phi(x) = -[sin(pi/x^2)(-x^2 + ln(1+x^2) + x^2 ln(1+x^2))/(pi x^2)]
///            * exp(-pi cot(pi/x^2)/x^2 + 1 + 1/x^2).
/// Requires x > 1; strictly increasing through -1/e at x0, with values in
/// (-1/e, 0) for x > x0.
double phi(double x);

/// Forward map from mass point to SNR:
///   a = exp[x1^2 W(k, phi(x1)) - x1^2 + pi cot(pi/x1^2) + ln(x1^2) + ln(1+x1^2) - 1].
/// MinusOne covers a <= a0 (decreasing in x1), Principal a >= a0 (increasing).
/// phi values within 1e-11 of -1/e are treated as exactly -1/e so both branches
/// agree at the junction.
double snr_of_x1(double x1, BranchK branch);

/// Residual of the stationarity condition the optimal mass point satisfies:
///   x1^2 - (1+x1^2)ln(1+x1^2)
///   - pi (a/(x1^2+x1^4))^{1/x1^2} csc(pi/x1^2) [1+x1^2 - pi cot(pi/x1^2) + ln(a/(x1^2+x1^4))].
/// Zero at the optimum; an algebraic rewriting of the forward map.
double stationarity_residual(double x1, Snr a);

/// Invert the forward map: the x1 >= x0 with snr_of_x1(x1, branch) = a, branch
/// chosen MinusOne iff a <= a0.  Bracketed bisection/secant to relative
/// residual 1e-10.  Valid for 0 < a <= a_max; the relation's derivation only
/// holds to order below 2, so results at the top of that range carry an
/// order-limit caveat surfaced by the CLI.
SolveResult solve_x1(Snr a, double a_max = 0.1);

/// Directly maximize the mutual information over x1 in [sqrt(a), X_max]
/// (closed form, or the quadrature oracle when use_closed_form is false) by
/// Brent's method with golden-section fallback.  The attained maximum is
/// returned in `objective`.  Throws BoundaryMaximumError if the maximizer hits
/// the upper edge of the bracket.
SolveResult maximize_mi(Snr a, bool use_closed_form = true);

}  // namespace lowsnr
