#include <cmath>

#include <doctest.h>

#include "lowsnr/errors.hpp"
#include "lowsnr/quadrature.hpp"

using namespace lowsnr;

TEST_CASE("integrate_adaptive on smooth functions") {
  const QuadResult r1 =
      integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(std::fabs(r1.value - 1.0 / 3.0) <= r1.abs_error_estimate + 1e-15);

  const QuadResult r2 =
      integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-13));

  // decaying exponential over a long window
  const QuadResult r3 = integrate_adaptive(
      [](double x) { return std::exp(-x); }, 0.0, 60.0, 1e-13);
  CHECK(r3.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r3.evaluations >= 15);
}

TEST_CASE("integrate_adaptive error estimates are honest") {
  const double truth = std::atan(5.0) - std::atan(-5.0);
  const QuadResult r = integrate_adaptive(
      [](double x) { return 1.0 / (1.0 + x * x); }, -5.0, 5.0, 1e-11);
  CHECK(std::fabs(r.value - truth) <= r.abs_error_estimate + 1e-15);
}

TEST_CASE("integrate_adaptive reports convergence failure with partial value") {
  bool thrown = false;
  try {
    // integrable endpoint singularity, starved of subdivisions
    integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0,
                       1e-14, 4);
  } catch (const ConvergenceError& e) {
    thrown = true;
    CHECK(e.partial.evaluations > 0);
    CHECK(e.partial.value > 0.0);
    CHECK(e.partial.abs_error_estimate > 1e-14);
  }
  CHECK(thrown);
}
