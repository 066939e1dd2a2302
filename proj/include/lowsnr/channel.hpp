#pragma once

#include "lowsnr/types.hpp"

namespace lowsnr {

/// Conditional output density f(y|x) = exp(-y/(1+x^2))/(1+x^2) in normalized units.
double cond_density(double y, double x);

/// Mixture output density p0*e^{-y} + p1*f(y|x1).
double output_density(double y, const OnOffInput& input);

/// ln(f(y|0)/f(y)) and ln(f(y|x1)/f(y)), evaluated through the mixture ratio so
/// neither density is formed explicitly (the off-ratio exponent grows with y).
double log_ratio_off(double y, const OnOffInput& input);
double log_ratio_on(double y, const OnOffInput& input);

/// Mutual information of the on-off input by adaptive quadrature of the
/// defining integral; the independent oracle for mi_closed.  Exactly zero for
/// p1 in {0, 1} and for x1 = 0.
QuadResult mi_quadrature(const OnOffInput& input);

/// Closed-form mutual information for mass point x1 at SNR a (power constraint
/// active, p1 = a/x1^2).  Requires x1 >= sqrt(a); exactly zero at x1 = sqrt(a).
/// Falls back to quadrature within 1e-8 relative of that boundary, where the
/// log terms cancel catastrophically.
double mi_closed(double x1, Snr a);

/// Low-SNR series form: (1 - ln(1+x1^2)/x1^2)*a
///   - pi*x1^2*(x1^2*(1+x1^2))^{-(1+x1^2)/x1^2}*csc(pi/x1^2)*a^{1+1/x1^2}.
/// Requires x1 > 1 (cosecant pole at x1 = 1).
double mi_series(double x1, Snr a);

/// d/dx1 of the mutual information at fixed p1, via its integral form
/// (2 p1 x1/(1+x1^2)^2) * integral of (y - (1+x1^2)) f(y|x1) ln(f(y|x1)/f(y)).
/// Strictly positive on its domain.
QuadResult mi_derivative_x1(const OnOffInput& input);

}  // namespace lowsnr
