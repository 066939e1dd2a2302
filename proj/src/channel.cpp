#include "lowsnr/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lowsnr/errors.hpp"
#include "lowsnr/quadrature.hpp"
#include "lowsnr/specfun.hpp"

namespace lowsnr {

double cond_density(double y, double x) {
  if (!(y >= 0.0) || !(x >= 0.0))
    throw std::domain_error("cond_density: needs y >= 0 and x >= 0");
  const double m = 1.0 + x * x;
  return std::exp(-y / m) / m;
}

double output_density(double y, const OnOffInput& input) {
  return input.p0() * std::exp(-y) + input.p1 * cond_density(y, input.x1);
}

double log_ratio_off(double y, const OnOffInput& input) {
  // f(y)/f(y|0) = p0 + (p1/alpha) e^{y(1-1/alpha)}; log-sum-exp since the
  // exponent can overflow at the far end of the integration window
  const double alpha = 1.0 + input.x1 * input.x1;
  const double g = y * (1.0 - 1.0 / alpha);
  if (input.p1 <= 0.0) return 0.0;
  const double lb = std::log(input.p1 / alpha) + g;
  if (input.p1 >= 1.0) return -lb;
  const double la = std::log1p(-input.p1);
  const double m = std::max(la, lb);
  return -(m + std::log(std::exp(la - m) + std::exp(lb - m)));
}

double log_ratio_on(double y, const OnOffInput& input) {
  // f(y)/f(y|x1) = p1 + p0*alpha*e^{-y(1-1/alpha)}; the exponent is <= 0
  const double alpha = 1.0 + input.x1 * input.x1;
  const double g = y * (1.0 - 1.0 / alpha);
  return -std::log(input.p1 + (1.0 - input.p1) * alpha * std::exp(-g));
}

QuadResult mi_quadrature(const OnOffInput& input) {
  if (input.p1 == 0.0 || input.p1 == 1.0) return {0.0, 0.0, 1};

  const double alpha = 1.0 + input.x1 * input.x1;
  const double y_max = 50.0 * alpha;
  const auto integrand = [&input, alpha](double y) {
    const double on = std::exp(-y / alpha) / alpha * log_ratio_on(y, input);
    const double off = std::exp(-y) * log_ratio_off(y, input);
    return input.p0() * off + input.p1 * on;
  };

  QuadResult q = integrate_adaptive(integrand, 0.0, y_max, 1e-11);

  // tail bounds: |off ratio log| <= y + |ln(p1/alpha)| there, |on ratio log|
  // <= |ln p1| + ln(1+alpha)
  const double c_off = std::fabs(std::log(input.p1 / alpha));
  const double tail_off = input.p0() * (y_max + c_off + 1.0) * std::exp(-y_max);
  const double c_on = std::fabs(std::log(input.p1)) + std::log1p(alpha);
  const double tail_on = input.p1 * c_on * std::exp(-y_max / alpha);
  q.abs_error_estimate += tail_off + tail_on;

  if (q.abs_error_estimate > 1e-9)
    throw ConvergenceError("mi_quadrature: error target not met", q);
  return q;
}

double mi_closed(double x1, Snr a) {
  if (!(x1 > 0.0)) throw std::domain_error("mi_closed: needs x1 > 0");
  const double av = a.linear();
  const double xsq = x1 * x1;
  if (xsq < av) {
    if (av - xsq <= 8.0 * 2.2e-16 * av) return 0.0;
    throw std::domain_error("mi_closed: needs x1 >= sqrt(a)");
  }
  if (xsq == av) return 0.0;
  if (xsq - av < 1e-8 * xsq)
    return mi_quadrature(OnOffInput::for_snr(x1, a)).value;

  const double alpha = 1.0 + xsq;
  const double z = -alpha * (xsq - av) / av;
  const double f21 = gauss_2f1_1b(1.0 / xsq, z).value;
  return av -
         av * (std::log1p(xsq) / xsq + 1.0 / alpha + (xsq / alpha) * f21) -
         std::log1p(-av / xsq) - std::log1p(av / (alpha * (xsq - av)));
}

double mi_series(double x1, Snr a) {
  if (!(x1 > 1.0))
    throw std::domain_error("mi_series: needs x1 > 1");
  const double av = a.linear();
  const double xsq = x1 * x1;
  if (!(av < xsq)) throw std::domain_error("mi_series: needs a < x1^2");

  const double linear_part = (1.0 - std::log1p(xsq) / xsq) * av;
  const double csc = 1.0 / std::sin(M_PI / xsq);
  const double sublinear = M_PI * xsq *
                           std::pow(xsq * (1.0 + xsq), -(1.0 + xsq) / xsq) *
                           csc * std::pow(av, 1.0 + 1.0 / xsq);
  return linear_part - sublinear;
}

QuadResult mi_derivative_x1(const OnOffInput& input) {
  if (!(input.p1 > 0.0 && input.p1 < 1.0))
    throw std::domain_error("mi_derivative_x1: needs 0 < p1 < 1");
  if (!(input.x1 > 0.0))
    throw std::domain_error("mi_derivative_x1: needs x1 > 0");

  const double alpha = 1.0 + input.x1 * input.x1;
  const double y_max = 50.0 * alpha;
  const double prefactor = 2.0 * input.p1 * input.x1 / (alpha * alpha);
  const auto integrand = [&input, alpha](double y) {
    return (y - alpha) * std::exp(-y / alpha) / alpha * log_ratio_on(y, input);
  };

  QuadResult q = integrate_adaptive(integrand, 0.0, y_max, 1e-11);
  const double c_on = std::fabs(std::log(input.p1)) + std::log1p(alpha);
  q.abs_error_estimate += (y_max + alpha) * c_on * std::exp(-y_max / alpha);

  q.value *= prefactor;
  q.abs_error_estimate *= prefactor;
  if (q.abs_error_estimate > 1e-9)
    throw ConvergenceError("mi_derivative_x1: error target not met", q);
  return q;
}

}  // namespace lowsnr
