#include <cmath>

#include <doctest.h>

#include "lowsnr/errors.hpp"
#include "lowsnr/specfun.hpp"
#include "oracles.hpp"

using namespace lowsnr;

namespace {
constexpr double kInvE = 0.367879441171442321595523770161460867;
}

TEST_CASE("lambert_w known points") {
  CHECK(lambert_w(BranchK::Principal, 0.0) == 0.0);
  CHECK(lambert_w(BranchK::Principal, -kInvE) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(lambert_w(BranchK::MinusOne, -kInvE) == doctest::Approx(-1.0).epsilon(1e-12));
  // bisection oracle for W(0, 1)
  const double w1 = oracles::bisect_lambert(true, 1.0, 1e-14);
  CHECK(lambert_w(BranchK::Principal, 1.0) == doctest::Approx(w1).epsilon(1e-12));
  CHECK(lambert_w(BranchK::Principal, 1.0) ==
        doctest::Approx(0.5671432904097838).epsilon(1e-12));
  CHECK(lambert_w(BranchK::MinusOne, -0.1) ==
        doctest::Approx(oracles::bisect_lambert(false, -0.1, 1e-14)).epsilon(1e-11));
}

TEST_CASE("lambert_w residual across both branches") {
  const double lo = std::log(1e-12), hi = std::log(kInvE - 1e-9);
  for (int i = 0; i <= 60; ++i) {
    const double z = -std::exp(lo + (hi - lo) * i / 60.0);
    for (BranchK k : {BranchK::Principal, BranchK::MinusOne}) {
      const double w = lambert_w(k, z);
      CHECK(std::fabs(w * std::exp(w) - z) <= 1e-12 * std::max(1.0, std::fabs(z)));
    }
  }
  for (int i = 0; i <= 40; ++i) {
    const double z = (i == 0) ? 0.0 : std::pow(10.0, -8.0 + 14.0 * i / 40.0);
    const double w = lambert_w(BranchK::Principal, z);
    CHECK(std::fabs(w * std::exp(w) - z) <= 1e-12 * std::max(1.0, std::fabs(z)));
  }
}

TEST_CASE("lambert_w branch postconditions and domain") {
  for (int i = 1; i < 40; ++i) {
    const double z = -kInvE + (kInvE - 1e-9) * i / 40.0;
    CHECK(lambert_w(BranchK::Principal, z) >= -1.0);
    CHECK(lambert_w(BranchK::MinusOne, z) <= -1.0);
  }
  CHECK_THROWS_AS(lambert_w(BranchK::Principal, -kInvE - 1e-13), std::domain_error);
  CHECK_THROWS_AS(lambert_w(BranchK::MinusOne, 0.0), std::domain_error);
  CHECK_THROWS_AS(lambert_w(BranchK::MinusOne, 0.5), std::domain_error);
  // tolerance band just below the branch point
  CHECK(lambert_w(BranchK::MinusOne, -kInvE - 5e-15) ==
        doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("lambert_w near the branch point stays accurate") {
  for (double t : {1e-12, 1e-10, 5e-10, 2e-9, 1e-7, 1e-5}) {
    const double z = -kInvE + t;
    const double w0 = lambert_w(BranchK::Principal, z);
    const double wm = lambert_w(BranchK::MinusOne, z);
    CHECK(w0 >= -1.0);
    CHECK(wm <= -1.0);
    CHECK(std::fabs(w0 * std::exp(w0) - z) <= 1e-13);
    CHECK(std::fabs(wm * std::exp(wm) - z) <= 1e-13);
  }
}

TEST_CASE("lambert ladder upper bound") {
  CHECK(lambert_ladder_upper(-kInvE) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(lambert_ladder_upper(-0.1) ==
        doctest::Approx(-3.1366175382420015).epsilon(1e-12));
  for (int i = 1; i < 80; ++i) {
    const double z = -kInvE + (kInvE - 1e-10) * i / 80.0;
    CHECK(lambert_ladder_upper(z) >= lambert_w(BranchK::MinusOne, z) - 1e-14);
  }
  CHECK(lambert_ladder_upper(-0.3) >= oracles::bisect_lambert(false, -0.3, 1e-14));
  CHECK_THROWS_AS(lambert_ladder_upper(0.1), std::domain_error);
  CHECK_THROWS_AS(lambert_ladder_upper(-0.5), std::domain_error);
}

TEST_CASE("gauss_2f1_1b trivial and closed-form points") {
  for (double b : {0.1, 1.0, 3.7}) {
    const QuadResult r = gauss_2f1_1b(b, 0.0);
    CHECK(r.value == 1.0);
    CHECK(r.evaluations >= 1);
  }
  CHECK(gauss_2f1_1b(1.0, -1.0).value ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("gauss_2f1_1b frozen reference values") {
  // mpmath.hyp2f1 at 30 digits
  CHECK(gauss_2f1_1b(0.25, -10.0).value ==
        doctest::Approx(0.59261467920351546).epsilon(1e-10));
  CHECK(gauss_2f1_1b(0.1, -1000.0).value ==
        doctest::Approx(0.50941630078909494).epsilon(1e-10));
  CHECK(gauss_2f1_1b(2.0, -10.0).value ==
        doctest::Approx(0.15204209454403259).epsilon(1e-10));
  CHECK(gauss_2f1_1b(0.5, -0.1).value ==
        doctest::Approx(0.96853408234038925).epsilon(1e-10));
  CHECK(gauss_2f1_1b(2.0, -0.4).value ==
        doctest::Approx(0.79409704223483837).epsilon(1e-10));
}

TEST_CASE("gauss_2f1_1b agrees with the integral-representation oracle") {
  for (double b : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    for (double z : {-0.1, -1.0, -10.0, -1e3}) {
      const QuadResult r = gauss_2f1_1b(b, z);
      const double ref = oracles::hyp2f1_integral(b, z);
      CHECK(std::fabs(r.value - ref) <= 1e-9 * std::fabs(ref));
      CHECK(r.abs_error_estimate <= 1e-10);
      CHECK(r.evaluations >= 1);
    }
  }
  // the derived point straight from the integral form
  CHECK(gauss_2f1_1b(0.25, -10.0).value ==
        doctest::Approx(oracles::hyp2f1_integral(0.25, -10.0)).epsilon(1e-9));
}

TEST_CASE("gauss_2f1_1b domain errors") {
  CHECK_THROWS_AS(gauss_2f1_1b(0.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1_1b(-0.5, -1.0), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1_1b(0.5, 0.5), std::domain_error);
}

TEST_CASE("contiguous identity under the on-off substitution") {
  for (double xsq : {4.0, 5.0, 8.0, 16.0}) {
    for (double a : {1e-4, 1e-3, 1e-2, 5e-2}) {
      const double alpha = 1.0 + xsq;
      const double p1 = a / xsq;
      const double beta = p1 / ((1.0 - p1) * alpha);
      const double z = -1.0 / beta;
      const double b = 1.0 / (alpha - 1.0);
      const double lhs = gauss_2f1_1b(b, z).value +
                         (1.0 - p1) / p1 * gauss_2f1_1b(b + 1.0, z).value;
      CHECK(lhs == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}
