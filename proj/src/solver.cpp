#include "lowsnr/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lowsnr/channel.hpp"
#include "lowsnr/errors.hpp"
#include "lowsnr/specfun.hpp"

namespace lowsnr {

namespace {

constexpr double kInvE = 0.367879441171442321595523770161460867;
constexpr double kPi = 3.141592653589793238462643383279502884;

double cot(double t) { return std::cos(t) / std::sin(t); }

}  // namespace

double phi(double x) {
  if (!(x > 1.0)) throw std::domain_error("phi: needs x > 1");
  const double xsq = x * x;
  const double c = kPi / xsq;
  const double s = std::sin(c);
  const double lg = std::log1p(xsq);
  const double numerator = -xsq + lg + xsq * lg;
  return -(s * numerator) / (kPi * xsq) *
         std::exp(-kPi * cot(c) / xsq + 1.0 + 1.0 / xsq);
}

double snr_of_x1(double x1, BranchK branch) {
  const double xsq = x1 * x1;
  double p = phi(x1);
  // Junction clamps.  On the valid side (p > -1/e) snap only within 1e-11, so
  // both branches agree at the computed x0 without losing accuracy elsewhere.
  // Below the branch point the map is undefined anyway; accept a 1e-6 band so
  // a junction abscissa given to published precision still evaluates.
  if (std::fabs(p + kInvE) <= 1e-11 || (p < -kInvE && p + kInvE >= -1e-6))
    p = -kInvE;
  const double w = lambert_w(branch, p);
  const double c = kPi / xsq;
  return std::exp(xsq * w - xsq + kPi * cot(c) + std::log(xsq) +
                  std::log1p(xsq) - 1.0);
}

double stationarity_residual(double x1, Snr a) {
  if (!(x1 > 1.0)) throw std::domain_error("stationarity_residual: needs x1 > 1");
  const double av = a.linear();
  const double xsq = x1 * x1;
  if (!(av < xsq))
    throw std::domain_error("stationarity_residual: needs a < x1^2");
  const double c = kPi / xsq;
  const double q = av / (xsq + xsq * xsq);
  return xsq - (1.0 + xsq) * std::log1p(xsq) -
         kPi * std::pow(q, 1.0 / xsq) / std::sin(c) *
             (1.0 + xsq - kPi * cot(c) + std::log(q));
}

namespace {

LowSnrConstants compute_constants() {
  // bisect phi(x) = -1/e on [1.5, 3]
  double lo = 1.5, hi = 3.0;
  double flo = phi(lo) + kInvE;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phi(mid) + kInvE;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double x0 = 0.5 * (lo + hi);
  const double a0 = snr_of_x1(x0, BranchK::Principal);  // junction: branches agree
  return {x0 * x0, a0, std::log(a0) + x0 * x0};
}

}  // namespace

double LowSnrConstants::x0() const { return std::sqrt(x0_sq); }

const LowSnrConstants& constants() {
  static const LowSnrConstants k = compute_constants();
  return k;
}

namespace {

// Brent's zero finder on [lo, hi]; f(lo), f(hi) must differ in sign.
template <class F>
double brent_root(F&& f, double lo, double hi, double flo, double fhi,
                  int& iterations, double xtol) {
  double a = lo, b = hi, fa = flo, fb = fhi;
  double c = a, fc = fa, d = b - a, e = d;
  for (iterations = 0; iterations < 200; ++iterations) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double m = 0.5 * (c - b);
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() *
                           std::fabs(b) + 0.5 * xtol;
    if (std::fabs(m) <= tol || fb == 0.0) break;
    if (std::fabs(e) < tol || std::fabs(fa) <= std::fabs(fb)) {
      d = e = m;  // bisection
    } else {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

}  // namespace

SolveResult solve_x1(Snr a, double a_max) {
  const double av = a.linear();
  if (!(av <= a_max))
    throw std::domain_error("solve_x1: a exceeds a_max");
  const LowSnrConstants& k = constants();
  const BranchK branch = (av <= k.a0) ? BranchK::MinusOne : BranchK::Principal;
  const double x0 = k.x0();
  const double log_a = std::log(av);

  const auto g = [&](double x) { return std::log(snr_of_x1(x, branch)) - log_a; };

  double lo, hi;
  if (branch == BranchK::MinusOne) {
    // the mass-point upper bound sqrt(xi0 - ln a) brackets the root from above
    lo = x0;
    hi = std::max(std::sqrt(std::max(k.xi0 - log_a, k.x0_sq)), x0 + 1e-6);
  } else {
    lo = x0;
    hi = 4.0 * x0;
  }
  double glo = g(lo);
  double ghi = g(hi);
  int iterations = 0;
  double root;
  if (glo == 0.0) {
    root = lo;
  } else if (ghi == 0.0) {
    root = hi;
  } else {
    int expansions = 0;
    while ((glo > 0.0) == (ghi > 0.0)) {
      hi *= 2.0;
      ghi = g(hi);
      if (++expansions > 60)
        throw BracketError("solve_x1: no sign change found", lo, hi);
    }
    root = brent_root(g, lo, hi, glo, ghi, iterations, 1e-14 * hi);
  }
  const double achieved = snr_of_x1(root, branch);
  const double residual = std::fabs(achieved - av) / av;
  return {root, residual, iterations, branch, achieved};
}

SolveResult maximize_mi(Snr a, bool use_closed_form) {
  const double av = a.linear();
  const LowSnrConstants& k = constants();
  const double lo = std::max(std::sqrt(av) * (1.0 + 1e-9), 1.0 + 1e-6);
  const double hi =
      std::max(10.0, 2.0 * std::sqrt(std::max(k.xi0 - std::log(av), 1.0)));

  const auto f = [&](double x) {
    if (use_closed_form) return mi_closed(x, a);
    return mi_quadrature(OnOffInput::for_snr(x, a)).value;
  };

  // Brent minimization of -f (golden section with parabolic steps)
  constexpr double golden = 0.3819660112501051;
  double x = lo + golden * (hi - lo), w = x, v = x;
  double fx = -f(x), fw = fx, fv = fx;
  double a_ = lo, b_ = hi;
  double delta = 0.0, delta_prev = 0.0;
  int iterations = 0;
  for (; iterations < 300; ++iterations) {
    const double mid = 0.5 * (a_ + b_);
    const double tol = 1e-10 * std::fabs(x) + 1e-13;
    if (std::fabs(x - mid) <= 2.0 * tol - 0.5 * (b_ - a_)) break;
    bool parabolic_ok = false;
    if (std::fabs(delta_prev) > tol) {
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double delta_old = delta_prev;
      delta_prev = delta;
      if (std::fabs(p) < std::fabs(0.5 * q * delta_old) && p > q * (a_ - x) &&
          p < q * (b_ - x)) {
        delta = p / q;
        const double u = x + delta;
        if (u - a_ < 2.0 * tol || b_ - u < 2.0 * tol)
          delta = (mid - x) >= 0.0 ? tol : -tol;
        parabolic_ok = true;
      }
    }
    if (!parabolic_ok) {
      delta_prev = (x >= mid) ? a_ - x : b_ - x;
      delta = golden * delta_prev;
    }
    const double u =
        (std::fabs(delta) >= 1e-10 * std::fabs(x) + 1e-13)
            ? x + delta
            : x + ((delta > 0.0) ? 1e-10 * std::fabs(x) + 1e-13
                                 : -(1e-10 * std::fabs(x) + 1e-13));
    const double fu = -f(u);
    if (fu <= fx) {
      if (u >= x) a_ = x; else b_ = x;
      v = w; w = x; x = u;
      fv = fw; fw = fx; fx = fu;
    } else {
      if (u < x) a_ = u; else b_ = u;
      if (fu <= fw || w == x) {
        v = w; w = u;
        fv = fw; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }

  if (hi - x <= 1e-6 * hi)
    throw BoundaryMaximumError("maximize_mi: maximizer at the bracket edge", hi);

  const BranchK branch = (av <= k.a0) ? BranchK::MinusOne : BranchK::Principal;
  return {x, (b_ - a_) / std::max(1.0, std::fabs(x)), iterations, branch, -fx};
}

}  // namespace lowsnr
