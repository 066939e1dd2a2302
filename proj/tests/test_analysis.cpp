#include <cmath>

#include <doctest.h>

#include "lowsnr/analysis.hpp"
#include "lowsnr/channel.hpp"
#include "lowsnr/errors.hpp"
#include "lowsnr/solver.hpp"

using namespace lowsnr;

TEST_CASE("capacity_at frozen values and identities") {
  // the series capacity at the published abscissa, pinned at 30 digits
  CHECK(capacity_at(Snr(1e-3), std::sqrt(4.96815)) ==
        doctest::Approx(0.00052833565623605584).epsilon(1e-10));
  CHECK(capacity_at(Snr(1e-4), std::sqrt(5.0)) ==
        doctest::Approx(5.7013993251100184e-5).epsilon(1e-10));
  // same expression as mi_series, different code path
  CHECK(capacity_at(Snr(1e-4), std::sqrt(5.0)) ==
        doctest::Approx(mi_series(std::sqrt(5.0), Snr(1e-4))).epsilon(1e-12));
  for (double xsq : {4.0, 5.0, 8.0, 16.0})
    for (double a : {1e-4, 1e-3, 1e-2, 5e-2})
      CHECK(capacity_at(Snr(a), std::sqrt(xsq)) < a);
  CHECK_THROWS_AS(capacity_at(Snr(1e-3), 1.0), std::domain_error);
  CHECK_THROWS_AS(capacity_at(Snr(9.0), 2.0), std::domain_error);
}

TEST_CASE("penalty_per_snr is the complementary capacity fraction") {
  for (double xsq : {4.0, 5.0, 8.0, 16.0}) {
    for (double a : {1e-4, 1e-3, 1e-2, 5e-2}) {
      const double x1 = std::sqrt(xsq);
      const double lhs = penalty_per_snr(Snr(a), x1) * a + capacity_at(Snr(a), x1);
      CHECK(std::fabs(lhs - a) <= 1e-12 * a);
    }
  }
  const SolveResult s = solve_x1(Snr(1e-3));
  CHECK(penalty_per_snr(Snr(1e-3), s.value) ==
        doctest::Approx(0.47165315135252234).epsilon(1e-9));
  // validity-flagged regime: the band from the reported curve
  const SolveResult s01 = solve_x1(Snr(0.1));
  const double pen01 = penalty_per_snr(Snr(0.1), s01.value);
  CHECK(pen01 >= 0.55);
  CHECK(pen01 <= 0.75);
  CHECK_THROWS_AS(penalty_per_snr(Snr(1e-3), 0.9), std::domain_error);
}

TEST_CASE("capacity_low_snr assembles a consistent record") {
  const CapacityPoint p = capacity_low_snr(Snr(1e-3));
  CHECK(p.a == 1e-3);
  CHECK(p.x1 * p.x1 == doctest::Approx(4.9216373492971763).epsilon(1e-9));
  CHECK(p.p1 == doctest::Approx(1e-3 / 4.9216373492971763).epsilon(1e-9));
  CHECK(p.delta == doctest::Approx(p.a - p.capacity).epsilon(1e-15));
  CHECK(p.delta_over_a == doctest::Approx(0.47165315135252234).epsilon(1e-9));
  CHECK(p.penalty == doctest::Approx(p.delta_over_a).epsilon(1e-12));
  CHECK(p.energy_per_nat == doctest::Approx(p.a / p.capacity).epsilon(1e-15));
  CHECK(p.energy_per_nat ==
        doctest::Approx(1.0 / (1.0 - p.delta_over_a)).epsilon(1e-12));
  CHECK(p.energy_per_nat == doctest::Approx(1.8926960623690843).epsilon(1e-8));
  CHECK(p.energy_per_nat >= 1.0);
  CHECK(p.delta_over_a >= 0.0);
  CHECK(p.delta_over_a < 1.0);
  CHECK(p.capacity <= p.a);
  CHECK(p.branch == BranchK::MinusOne);
  CHECK(p.method == CapacityPoint::Method::FixedPoint);
}

TEST_CASE("capacity and efficiency trends over the decade grid") {
  const double a0 = constants().a0;
  double prev_c = -1.0, prev_doa = -1.0;
  for (int i = 0; i < 25; ++i) {
    const double a = std::exp(std::log(1e-8) +
                              (std::log(a0 * 0.999) - std::log(1e-8)) * i / 24.0);
    const CapacityPoint p = capacity_low_snr(Snr(a));
    CHECK(p.capacity > prev_c);        // capacity increases with a
    CHECK(p.delta_over_a > prev_doa);  // efficiency loss grows with a
    CHECK(p.energy_per_nat >= 1.0);
    CHECK(p.energy_per_nat ==
          doctest::Approx(1.0 / (1.0 - p.delta_over_a)).epsilon(1e-10));
    prev_c = p.capacity;
    prev_doa = p.delta_over_a;
  }
}

TEST_CASE("capacity over a approaches one from below as a drops") {
  double prev = 0.0;
  for (double a : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
    const CapacityPoint p = capacity_low_snr(Snr(a));
    const double ratio = p.capacity / p.a;
    CHECK(ratio > prev);
    CHECK(ratio < 1.0);
    prev = ratio;
  }
}

TEST_CASE("super-linear capacity gap grows without bound") {
  double prev = 0.0;
  for (double a : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const CapacityPoint p = capacity_low_snr(Snr(a));
    const double r = p.delta / std::pow(a, 1.5);
    if (prev > 0.0) CHECK(r > 2.0 * prev);
    prev = r;
  }
}

TEST_CASE("x1_upper_bound") {
  const LowSnrConstants& k = constants();
  CHECK(x1_upper_bound(Snr(k.a0)) == doctest::Approx(k.x0()).epsilon(1e-12));
  CHECK(x1_upper_bound(Snr(1e-3)) == doctest::Approx(2.8281).epsilon(1e-3));
  CHECK(x1_upper_bound(Snr(1e-3)) >= std::sqrt(4.96815));
  for (double a : {1e-6, 1e-4, 1e-2, k.a0 * 0.999})
    CHECK(x1_upper_bound(Snr(a)) >= solve_x1(Snr(a)).value);
  CHECK_THROWS_AS(x1_upper_bound(Snr(k.a0 * 1.01)), std::domain_error);
}

TEST_CASE("x1_lower_bound ladder and ordering") {
  CHECK(x1_lower_bound(Snr(1e-3)) <= std::sqrt(4.96815));
  CHECK(x1_lower_bound(Snr(1e-3)) ==
        doctest::Approx(2.0796754797838097).epsilon(1e-6));
  for (double a : {1e-6, 1e-4, 1e-3})
    CHECK(x1_lower_bound_one_step(Snr(a)) <= x1_lower_bound(Snr(a)));
  // full sandwich on an 8-point log grid inside the validity window
  for (int i = 0; i < 8; ++i) {
    const double a =
        std::exp(std::log(2e-6) + (std::log(5e-2) - std::log(2e-6)) * i / 7.0);
    const double lb = x1_lower_bound(Snr(a));
    const double x = solve_x1(Snr(a)).value;
    const double ub = x1_upper_bound(Snr(a));
    CHECK(lb <= x);
    CHECK(x <= ub);
  }
  // too close to a0: the phi argument leaves (-1/e, 0) and must be reported
  CHECK_THROWS_AS(x1_lower_bound(Snr(0.056)), std::domain_error);
  CHECK_THROWS_AS(x1_lower_bound_one_step(Snr(0.056)), std::domain_error);
  CHECK_THROWS_AS(x1_lower_bound(Snr(0.07)), std::domain_error);
}

TEST_CASE("capacity_bounds bundle") {
  const BoundsPoint b = capacity_bounds(Snr(1e-3));
  const CapacityPoint p = capacity_low_snr(Snr(1e-3));
  CHECK(b.x1_lower <= p.x1);
  CHECK(p.x1 <= b.x1_upper);
  CHECK(b.c_lower <= p.capacity);
  CHECK(b.c_upper <= p.capacity);  // the curve peaks at the solved mass point
  CHECK(b.c_lower <= b.c_upper);
  CHECK(b.c_upper < b.a);
  CHECK_THROWS_AS(capacity_bounds(Snr(0.06)), std::domain_error);

  // near the junction the two bound evaluations close in on each other
  double prev_gap = 1e300;
  for (double a : {2e-2, 3e-2, 4e-2, 5e-2}) {
    const BoundsPoint bb = capacity_bounds(Snr(a));
    const double gap = std::fabs(bb.c_upper - bb.c_lower) / a;
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}
