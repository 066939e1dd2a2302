#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lowsnr/analysis.hpp"
#include "lowsnr/csv.hpp"
#include "lowsnr/solver.hpp"
#include "lowsnr/sweep.hpp"
#include "lowsnr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitUsage = 64;

struct SnrFlags {
  std::optional<double> linear;
  std::optional<double> db;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--snr", linear, "SNR a, linear scale");
    auto* b = cmd->add_option("--snr-db", db, "SNR in dB (a = 10^(dB/10))");
    a->excludes(b);
    b->excludes(a);
  }
  lowsnr::Snr value() const {
    if (linear) return lowsnr::Snr(*linear);
    if (db) return lowsnr::Snr::from_db(*db);
    throw CLI::RequiredError("--snr or --snr-db");
  }
  bool provided() const { return linear.has_value() || db.has_value(); }
};

lowsnr::SweepGrid parse_grid(const std::string& text) {
  // start:stop:points[:log|lin]
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4)
    throw CLI::ValidationError("--grid", "expected start:stop:points[:log|lin]");
  lowsnr::SweepGrid grid;
  try {
    grid.start = std::stod(parts[0]);
    grid.stop = std::stod(parts[1]);
    grid.points = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "could not parse numbers in " + text);
  }
  if (parts.size() == 4) {
    if (parts[3] == "log")
      grid.spacing = lowsnr::SweepGrid::Spacing::Log;
    else if (parts[3] == "lin")
      grid.spacing = lowsnr::SweepGrid::Spacing::Linear;
    else
      throw CLI::ValidationError("--grid", "spacing must be log or lin");
  }
  return grid;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void print_kv(std::ostream& os, const char* key, const std::string& value) {
  os << key << " = " << value << "\n";
}

void print_kv(std::ostream& os, const char* key, double value) {
  os << key << " = " << lowsnr::format_sig12(value) << "\n";
}

int cmd_solve(const lowsnr::Snr& a, double a_max, const std::string& out_path) {
  const lowsnr::CapacityPoint p = lowsnr::capacity_low_snr(a, a_max);
  std::ostringstream os;
  print_kv(os, "a", p.a);
  print_kv(os, "a_db", a.db());
  print_kv(os, "x1", p.x1);
  print_kv(os, "x1_sq", p.x1 * p.x1);
  print_kv(os, "p1", p.p1);
  print_kv(os, "capacity", p.capacity);
  print_kv(os, "delta", p.delta);
  print_kv(os, "delta_over_a", p.delta_over_a);
  print_kv(os, "penalty", p.penalty);
  print_kv(os, "energy_per_nat", p.energy_per_nat);
  print_kv(os, "energy_per_nat_approx", 1.0 + p.delta_over_a);
  print_kv(os, "branch", std::string(lowsnr::to_string(p.branch)));
  const double a0 = lowsnr::constants().a0;
  std::string validity = "ok";
  if (p.a > 2e-2)
    validity = "order-limit warning: relation derived for low SNR only";
  print_kv(os, "validity", validity);
  if (std::fabs(p.a - a0) <= 5e-3 * a0)
    print_kv(os, "note", std::string("branch junction: a is within 0.5% of a0"));
  std::cout << os.str();

  if (!out_path.empty()) {
    lowsnr::CsvTable t;
    t.header = {"a", "x1", "x1_sq", "p1", "capacity", "delta", "delta_over_a",
                "penalty", "energy_per_nat"};
    t.rows.push_back({p.a, p.x1, p.x1 * p.x1, p.p1, p.capacity, p.delta,
                      p.delta_over_a, p.penalty, p.energy_per_nat});
    write_output(lowsnr::to_csv(t), out_path);
  }
  return kExitOk;
}

int cmd_bounds(const lowsnr::Snr& a) {
  const lowsnr::BoundsPoint b = lowsnr::capacity_bounds(a);
  const lowsnr::CapacityPoint p = lowsnr::capacity_low_snr(a);
  std::ostringstream os;
  print_kv(os, "a", b.a);
  print_kv(os, "x1_lower_one_step", lowsnr::x1_lower_bound_one_step(a));
  print_kv(os, "x1_lower", b.x1_lower);
  print_kv(os, "x1_exact", p.x1);
  print_kv(os, "x1_upper", b.x1_upper);
  print_kv(os, "c_lower", b.c_lower);
  print_kv(os, "capacity", p.capacity);
  print_kv(os, "c_upper", b.c_upper);
  std::cout << os.str();
  return kExitOk;
}

int cmd_penalty(const lowsnr::Snr& a, double a_max) {
  const lowsnr::SolveResult s = lowsnr::solve_x1(a, a_max);
  std::ostringstream os;
  print_kv(os, "a", a.linear());
  print_kv(os, "x1", s.value);
  print_kv(os, "penalty", lowsnr::penalty_per_snr(a, s.value));
  print_kv(os, "validity",
           std::string(a.linear() > 2e-2
                           ? "order-limit warning: relation derived for low SNR only"
                           : "ok"));
  std::cout << os.str();
  return kExitOk;
}

int cmd_sweep(const lowsnr::SweepGrid& grid, const std::string& figure_name,
              const lowsnr::SweepOptions& options, const std::string& out_path) {
  lowsnr::Figure figure;
  if (figure_name == "masspoint") figure = lowsnr::Figure::MassPoint;
  else if (figure_name == "capacity") figure = lowsnr::Figure::Capacity;
  else if (figure_name == "penalty") figure = lowsnr::Figure::Penalty;
  else if (figure_name == "bounds") figure = lowsnr::Figure::Bounds;
  else if (figure_name == "miprofile") figure = lowsnr::Figure::MiProfile;
  else throw CLI::ValidationError("--figure",
      "must be one of masspoint|capacity|penalty|bounds|miprofile");

  const lowsnr::SweepOutcome outcome = lowsnr::run_sweep(grid, figure, options);
  write_output(lowsnr::to_csv(outcome.table), out_path);
  for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << "\n";
  if (outcome.failed > 0)
    std::cerr << outcome.failed << "/" << outcome.total << " points failed\n";
  const bool ok = outcome.failed * 10 <= outcome.total;  // >= 90% success
  return ok ? kExitOk : kExitNumeric;
}

int cmd_verify(const std::string& level, std::uint64_t seed,
               std::size_t samples) {
  std::vector<lowsnr::Check> checks;
  if (level == "fast") checks = lowsnr::fast_checks();
  else if (level == "full") checks = lowsnr::full_checks(seed, samples);
  else throw CLI::ValidationError("--level", "must be fast or full");
  const int failures = lowsnr::run_checks(checks, std::cout);
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Low-SNR capacity of the non-coherent Rayleigh fading channel: "
      "optimal on-off signaling, capacity, penalty, and bounds"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Optimal input and capacity at one SNR");
  SnrFlags solve_snr;
  solve_snr.attach(solve);
  double solve_a_max = 0.1;
  std::string solve_out;
  solve->add_option("--a-max", solve_a_max, "largest accepted SNR");
  solve->add_option("--out", solve_out, "also write a one-row CSV here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate a figure over an SNR grid, emit CSV");
  std::string grid_text, figure_name = "capacity", sweep_out;
  std::vector<double> profile_snrs;
  double sweep_a_max = 0.1;
  int threads = 0;
  sweep->add_option("--grid", grid_text, "start:stop:points[:log|lin]")->required();
  sweep->add_option("--figure", figure_name,
                    "masspoint|capacity|penalty|bounds|miprofile");
  sweep->add_option("--snr", profile_snrs,
                    "fixed SNR values for miprofile (repeatable, up to 5)");
  sweep->add_option("--out", sweep_out, "output path (default stdout)");
  sweep->add_option("--a-max", sweep_a_max, "largest accepted SNR");
  sweep->add_option("--threads", threads, "worker threads (0 = hardware)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Mass-point and capacity bounds at one SNR");
  SnrFlags bounds_snr;
  bounds_snr.attach(bounds);

  // penalty
  auto* penalty = app.add_subcommand("penalty", "Non-coherence penalty per SNR at one SNR");
  SnrFlags penalty_snr;
  penalty_snr.attach(penalty);
  double penalty_a_max = 0.1;
  penalty->add_option("--a-max", penalty_a_max, "largest accepted SNR");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the cross-module invariant battery");
  std::string level = "fast";
  std::uint64_t seed = 20260808;
  std::size_t samples = 1000000;
  verify->add_option("--level", level, "fast|full");
  verify->add_option("--seed", seed, "Monte Carlo base seed (full level)");
  verify->add_option("--samples", samples, "Monte Carlo samples per seed (full level)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_snr.value(), solve_a_max, solve_out);
    if (sweep->parsed()) {
      lowsnr::SweepOptions options;
      options.a_max = sweep_a_max;
      options.profile_snrs = profile_snrs;
      options.threads = threads;
      return cmd_sweep(parse_grid(grid_text), figure_name, options, sweep_out);
    }
    if (bounds->parsed()) return cmd_bounds(bounds_snr.value());
    if (penalty->parsed()) return cmd_penalty(penalty_snr.value(), penalty_a_max);
    if (verify->parsed()) return cmd_verify(level, seed, samples);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
