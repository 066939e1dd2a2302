#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "lowsnr/errors.hpp"
#include "lowsnr/types.hpp"

namespace lowsnr {

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gk15(F&& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  const double fc = f(center);
  double res_gauss = kGaussWeights[3] * fc;
  double res_kronrod = kKronrodWeights[7] * fc;
  double res_abs = kKronrodWeights[7] * std::fabs(fc);
  fv[14] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    res_kronrod += kKronrodWeights[j] * (f1 + f2);
    res_abs += kKronrodWeights[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) res_gauss += kGaussWeights[j / 2] * (f1 + f2);
  }

  const double mean = 0.5 * res_kronrod;
  double res_asc = kKronrodWeights[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    res_asc += kKronrodWeights[j] *
               (std::fabs(fv[2 * j] - mean) + std::fabs(fv[2 * j + 1] - mean));

  const double value = res_kronrod * half;
  res_abs *= std::fabs(half);
  res_asc *= std::fabs(half);
  double err = std::fabs((res_kronrod - res_gauss) * half);
  if (res_asc != 0.0 && err != 0.0)
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  if (res_abs > tiny / (50.0 * eps)) err = std::max(eps * 50.0 * res_abs, err);
  return {lo, hi, value, err};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [lo, hi].
/// Splits the worst segment until the summed error estimate falls below
/// abs_tol; throws ConvergenceError (carrying the partial result) past
/// max_segments subdivisions.
template <class F>
QuadResult integrate_adaptive(F&& f, double lo, double hi, double abs_tol,
                              int max_segments = 2000) {
  long evals = 15;
  std::priority_queue<detail::Segment> queue;
  queue.push(detail::gk15(f, lo, hi));

  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int segments = 1;
  while (total_error > abs_tol && segments < max_segments) {
    detail::Segment worst = queue.top();
    queue.pop();
    total_value -= worst.value;
    total_error -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // interval exhausted at double precision; keep its estimate
      total_value += worst.value;
      total_error += worst.error;
      break;
    }
    detail::Segment left = detail::gk15(f, worst.lo, mid);
    detail::Segment right = detail::gk15(f, mid, worst.hi);
    evals += 30;
    ++segments;
    total_value += left.value + right.value;
    total_error += left.error + right.error;
    queue.push(left);
    queue.push(right);
  }

  QuadResult out{total_value, total_error, evals};
  if (total_error > abs_tol)
    throw ConvergenceError("integrate_adaptive: error target not met", out);
  return out;
}

}  // namespace lowsnr
