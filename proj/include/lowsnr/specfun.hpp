#pragma once

#include "lowsnr/types.hpp"

namespace lowsnr {

/// Real Lambert W on the requested branch: the w solving w*exp(w) = z.
/// Principal needs z >= -1/e and returns w >= -1; MinusOne needs z in [-1/e, 0)
/// and returns w <= -1.  Residual |w*e^w - z| is driven below 1e-13 relative.
/// Arguments up to 1e-14 below -1/e are treated as the branch point.
double lambert_w(BranchK k, double z);

/// ln(-z) - ln(-ln(-z)) for z in [-1/e, 0): an upper bound on lambert_w(MinusOne, z),
/// with equality at the branch point.
double lambert_ladder_upper(double z);

/// Gauss hypergeometric 2F1(1, b; b+1; z) for b > 0 and z <= 0, equal to
/// b * integral_0^1 t^(b-1)/(1 - z t) dt.  Evaluated by power series for small
/// |z| and by argument transformations elsewhere; the raw series diverges at the
/// very large negative z this toolkit needs.  abs_error_estimate <= 1e-10 on
/// success; ConvergenceError carries the partial value otherwise.
QuadResult gauss_2f1_1b(double b, double z);

}  // namespace lowsnr
