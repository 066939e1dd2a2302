#include "lowsnr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "lowsnr/analysis.hpp"
#include "lowsnr/channel.hpp"
#include "lowsnr/csv.hpp"
#include "lowsnr/simulate.hpp"
#include "lowsnr/solver.hpp"
#include "lowsnr/specfun.hpp"

namespace lowsnr {

namespace {

CheckResult pass_if(bool ok, const std::string& detail) { return {ok, detail}; }

std::string num(double v) { return format_sig12(v); }

CheckResult check_lambert_residual() {
  double worst = 0.0;
  const double inv_e = std::exp(-1.0);
  // |z| log-spaced so z runs over [-1/e + 1e-9, -1e-12] for both branches
  const double lo = std::log(1e-12), hi = std::log(inv_e - 1e-9);
  for (int i = 0; i <= 40; ++i) {
    const double z = -std::exp(lo + (hi - lo) * i / 40.0);
    for (BranchK k : {BranchK::Principal, BranchK::MinusOne}) {
      const double w = lambert_w(k, z);
      const double r = std::fabs(w * std::exp(w) - z) / std::max(1.0, std::fabs(z));
      worst = std::max(worst, r);
    }
  }
  for (int i = 0; i <= 30; ++i) {
    const double z = (i == 0) ? 0.0 : std::pow(10.0, -6.0 + 12.0 * i / 30.0);
    const double w = lambert_w(BranchK::Principal, z);
    const double r = std::fabs(w * std::exp(w) - z) / std::max(1.0, std::fabs(z));
    worst = std::max(worst, r);
  }
  return pass_if(worst <= 1e-12, "max residual " + num(worst));
}

CheckResult check_ladder_bound() {
  const double inv_e = std::exp(-1.0);
  for (int i = 1; i <= 60; ++i) {
    const double z = -inv_e + (inv_e - 1e-10) * i / 61.0;
    if (lambert_ladder_upper(z) < lambert_w(BranchK::MinusOne, z) - 1e-14)
      return pass_if(false, "violated at z = " + num(z));
  }
  return pass_if(true, "holds on (-1/e, 0) grid");
}

CheckResult check_contiguous_identity() {
  // F(1,b;b+1;z) + ((1-p1)/p1) F(1,b+1;b+2;z) = 1 under the on-off substitution
  double worst = 0.0;
  for (double xsq : {4.0, 5.0, 8.0, 16.0}) {
    for (double a : {1e-4, 1e-3, 1e-2, 5e-2}) {
      const double alpha = 1.0 + xsq;
      const double p1 = a / xsq;
      const double beta = p1 / ((1.0 - p1) * alpha);
      const double z = -1.0 / beta;
      const double b = 1.0 / (alpha - 1.0);
      const double lhs = gauss_2f1_1b(b, z).value +
                         (1.0 - p1) / p1 * gauss_2f1_1b(b + 1.0, z).value;
      worst = std::max(worst, std::fabs(lhs - 1.0));
    }
  }
  return pass_if(worst <= 1e-8, "max |lhs - 1| = " + num(worst));
}

CheckResult check_mi_oracle_equivalence() {
  double worst = 0.0;
  for (double xsq : {4.0, 5.0, 8.0, 16.0}) {
    for (double a : {1e-4, 1e-3, 1e-2, 5e-2}) {
      const double x1 = std::sqrt(xsq);
      const double closed = mi_closed(x1, Snr(a));
      const double quad = mi_quadrature(OnOffInput::for_snr(x1, Snr(a))).value;
      worst = std::max(worst, std::fabs(closed - quad));
    }
  }
  return pass_if(worst <= 1e-7, "max |closed - quadrature| = " + num(worst));
}

CheckResult check_mi_monotone() {
  for (double xsq : {4.0, 5.0, 8.0, 16.0}) {
    for (double a : {1e-4, 1e-3, 1e-2, 5e-2}) {
      const double d =
          mi_derivative_x1(OnOffInput::for_snr(std::sqrt(xsq), Snr(a))).value;
      if (!(d > 0.0))
        return pass_if(false, "derivative not positive at x1^2 = " + num(xsq) +
                                  ", a = " + num(a));
    }
  }
  return pass_if(true, "derivative positive on grid");
}

CheckResult check_branch_continuity() {
  const double x0 = constants().x0();
  const double diff = std::fabs(snr_of_x1(x0, BranchK::Principal) -
                                snr_of_x1(x0, BranchK::MinusOne));
  return pass_if(diff <= 1e-10, "junction gap " + num(diff));
}

CheckResult check_stationarity_equivalence() {
  // the stationarity residual vanishes on the forward map's own curve
  double worst = 0.0;
  for (double xsq : {4.2, 5.0, 8.0, 12.0}) {
    const double x1 = std::sqrt(xsq);
    const double a = snr_of_x1(x1, BranchK::MinusOne);
    const double res = stationarity_residual(x1, Snr(a));
    const double scale = xsq + (1.0 + xsq) * std::log1p(xsq);
    worst = std::max(worst, std::fabs(res) / scale);
  }
  return pass_if(worst <= 1e-8, "max scaled residual " + num(worst));
}

CheckResult check_capacity_series_identity() {
  double worst = 0.0;
  for (double xsq : {4.0, 5.0, 8.0, 16.0}) {
    for (double a : {1e-4, 1e-3, 1e-2}) {
      const double c = capacity_at(Snr(a), std::sqrt(xsq));
      const double s = mi_series(std::sqrt(xsq), Snr(a));
      worst = std::max(worst, std::fabs(c - s) / std::fabs(c));
    }
  }
  return pass_if(worst <= 1e-12, "max relative gap " + num(worst));
}

CheckResult check_solver_roundtrip() {
  double worst = 0.0;
  for (double xsq : {4.0, 4.5, 6.0, 10.0}) {
    const double x1 = std::sqrt(xsq);
    for (BranchK k : {BranchK::MinusOne, BranchK::Principal}) {
      const double a = snr_of_x1(x1, k);
      if (a > 0.1) continue;  // outside the solver's validity window
      const double back = solve_x1(Snr(a)).value;
      worst = std::max(worst, std::fabs(back - x1) / x1);
    }
  }
  return pass_if(worst <= 1e-8, "max roundtrip error " + num(worst));
}

CheckResult check_bound_sandwich() {
  for (double a : {2e-6, 1e-5, 1e-4, 1e-3, 1e-2, 4e-2, 5e-2}) {
    const Snr snr(a);
    const double lb1 = x1_lower_bound_one_step(snr);
    const double lb2 = x1_lower_bound(snr);
    const double x = solve_x1(snr).value;
    const double ub = x1_upper_bound(snr);
    if (!(lb1 <= lb2 && lb2 <= x && x <= ub))
      return pass_if(false, "ordering violated at a = " + num(a));
  }
  return pass_if(true, "lb1 <= lb2 <= x1 <= ub on grid");
}

CheckResult check_capacity_bounds_below_capacity() {
  // the capacity curve at fixed a peaks at the solved mass point, so both
  // bound evaluations must sit below the capacity (and below a)
  for (double a : {2e-6, 1e-5, 1e-4, 1e-3, 1e-2, 4e-2, 5e-2}) {
    const Snr snr(a);
    const BoundsPoint b = capacity_bounds(snr);
    const double c = capacity_low_snr(snr).capacity;
    if (!(b.c_lower <= c && b.c_upper <= c && b.c_upper < a && b.c_lower < a))
      return pass_if(false, "ordering violated at a = " + num(a));
  }
  return pass_if(true, "c_lower <= C, c_upper <= C < a on grid");
}

CheckResult check_scaled_masspoint_vanishing() {
  // a^alpha * x1(a)^2 must decrease toward zero down the decades
  for (double alpha : {0.5, 1.0}) {
    double prev = 1e300;
    for (double a : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
      const double v = std::pow(a, alpha) * std::pow(solve_x1(Snr(a)).value, 2);
      if (!(v < prev))
        return pass_if(false, "not decreasing at a = " + num(a) +
                                  ", alpha = " + num(alpha));
      prev = v;
    }
  }
  return pass_if(true, "decreasing along the decade grid");
}

CheckResult check_super_linear_gap_growth() {
  // delta/a^{1.5} must grow without bound; demand a factor > 2 per step
  double prev = 0.0;
  for (double a : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const CapacityPoint p = capacity_low_snr(Snr(a));
    const double r = p.delta / std::pow(a, 1.5);
    if (prev > 0.0 && !(r > 2.0 * prev))
      return pass_if(false, "growth factor too small at a = " + num(a));
    prev = r;
  }
  return pass_if(true, "ratio grows by > 2x per step");
}

CheckResult check_monte_carlo(std::uint64_t seed, std::size_t n_samples) {
  const double x1 = std::sqrt(5.0);
  const Snr a(1e-2);
  const double reference = mi_closed(x1, a);
  int hits = 0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    SimConfig cfg;
    cfg.seed = seed + static_cast<std::uint64_t>(s);
    cfg.n_samples = n_samples;
    cfg.input = OnOffInput::for_snr(x1, a);
    const MiEstimate e = estimate_mi(cfg);
    if (std::fabs(e.estimate - reference) <= 4.0 * e.std_error) ++hits;
  }
  std::ostringstream os;
  os << hits << "/" << seeds << " within 4 standard errors";
  return pass_if(hits >= 19, os.str());
}

CheckResult check_sampling_path_agreement(std::uint64_t seed) {
  const std::size_t n = 100000;
  SimConfig direct;
  direct.seed = seed;
  direct.n_samples = n;
  direct.input = OnOffInput::for_snr(std::sqrt(5.0), Snr(1e-2));
  SimConfig physical = direct;
  physical.seed = seed + 1;
  physical.path = SimConfig::SamplePath::ComplexGaussian;

  auto ys = [](const SimConfig& cfg, std::size_t n) {
    auto samples = sample_outputs(cfg, n);
    std::vector<double> y(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) y[i] = samples[i].y;
    std::sort(y.begin(), y.end());
    return y;
  };
  const std::vector<double> ya = ys(direct, n);
  const std::vector<double> yb = ys(physical, n);

  // two-sample Kolmogorov-Smirnov statistic
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < ya.size() && j < yb.size()) {
    if (ya[i] <= yb[j]) ++i; else ++j;
    const double fa = static_cast<double>(i) / ya.size();
    const double fb = static_cast<double>(j) / yb.size();
    d = std::max(d, std::fabs(fa - fb));
  }
  const double critical = 1.628 * std::sqrt(2.0 / static_cast<double>(n));
  return pass_if(d < critical,
                 "KS statistic " + num(d) + " vs 1% critical " + num(critical));
}

}  // namespace

std::vector<Check> fast_checks() {
  return {
      {"lambert-residual", check_lambert_residual},
      {"lambert-ladder-bound", check_ladder_bound},
      {"hypergeometric-contiguous-identity", check_contiguous_identity},
      {"mi-oracle-equivalence", check_mi_oracle_equivalence},
      {"mi-monotone-in-x1", check_mi_monotone},
      {"branch-continuity", check_branch_continuity},
      {"stationarity-forward-map-equivalence", check_stationarity_equivalence},
      {"capacity-series-identity", check_capacity_series_identity},
      {"solver-roundtrip", check_solver_roundtrip},
      {"masspoint-bound-sandwich", check_bound_sandwich},
      {"capacity-bounds-below-capacity", check_capacity_bounds_below_capacity},
      {"scaled-masspoint-vanishing", check_scaled_masspoint_vanishing},
      {"super-linear-gap-growth", check_super_linear_gap_growth},
  };
}

std::vector<Check> full_checks(std::uint64_t seed, std::size_t n_samples) {
  std::vector<Check> checks = fast_checks();
  checks.push_back({"monte-carlo-consistency", [seed, n_samples] {
                      return check_monte_carlo(seed, n_samples);
                    }});
  checks.push_back({"sampling-path-agreement",
                    [seed] { return check_sampling_path_agreement(seed); }});
  return checks;
}

int run_checks(const std::vector<Check>& checks, std::ostream& os) {
  int failures = 0;
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.passed) ++failures;
    os << (r.passed ? "PASS  " : "FAIL  ") << c.name;
    for (std::size_t i = c.name.size(); i < width + 2; ++i) os << ' ';
    os << r.detail << "\n";
  }
  os << (failures == 0 ? "all checks passed" :
         std::to_string(failures) + " check(s) failed") << "\n";
  return failures;
}

}  // namespace lowsnr
