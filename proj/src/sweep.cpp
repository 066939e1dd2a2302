#include "lowsnr/sweep.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "lowsnr/analysis.hpp"
#include "lowsnr/channel.hpp"
#include "lowsnr/solver.hpp"

namespace lowsnr {

std::vector<double> SweepGrid::values() const {
  if (points < 2) throw std::domain_error("SweepGrid: needs at least 2 points");
  if (!(start < stop)) throw std::domain_error("SweepGrid: needs start < stop");
  if (spacing == Spacing::Log && !(start > 0.0))
    throw std::domain_error("SweepGrid: log spacing needs start > 0");

  std::vector<double> v(points);
  if (spacing == Spacing::Log) {
    const double l0 = std::log(start), l1 = std::log(stop);
    for (int i = 0; i < points; ++i)
      v[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  } else {
    for (int i = 0; i < points; ++i)
      v[i] = start + (stop - start) * i / (points - 1);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

namespace {

// Evaluate fn over indices [0, n) on a small thread pool, results by slot.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > n) workers = n;
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

struct RowResult {
  std::vector<CsvCell> cells;
  std::string warning;
};

}  // namespace

SweepOutcome run_sweep(const SweepGrid& grid, Figure figure,
                       const SweepOptions& options) {
  SweepOutcome out;
  const std::vector<double> xs = grid.values();
  out.total = static_cast<int>(xs.size());

  std::function<std::vector<CsvCell>(double)> eval;
  switch (figure) {
    case Figure::MassPoint:
      out.table.header = {"a", "x1_fixedpoint", "x1_numericmax"};
      eval = [&options](double a) -> std::vector<CsvCell> {
        const Snr snr(a);
        return {a, solve_x1(snr, options.a_max).value, maximize_mi(snr).value};
      };
      break;
    case Figure::Capacity:
      out.table.header = {"a", "C_fixedpoint", "C_numericmax", "upper_linear"};
      eval = [&options](double a) -> std::vector<CsvCell> {
        const Snr snr(a);
        const CapacityPoint p = capacity_low_snr(snr, options.a_max);
        const SolveResult m = maximize_mi(snr);
        return {a, p.capacity, m.objective, a};
      };
      break;
    case Figure::Penalty:
      out.table.header = {"a", "penalty"};
      eval = [&options](double a) -> std::vector<CsvCell> {
        const Snr snr(a);
        const SolveResult s = solve_x1(snr, options.a_max);
        return {a, penalty_per_snr(snr, s.value)};
      };
      break;
    case Figure::Bounds:
      out.table.header = {"a", "x1_lower", "x1_exact", "x1_upper"};
      eval = [&options](double a) -> std::vector<CsvCell> {
        const Snr snr(a);
        return {a, x1_lower_bound(snr), solve_x1(snr, options.a_max).value,
                x1_upper_bound(snr)};
      };
      break;
    case Figure::MiProfile: {
      if (options.profile_snrs.empty() || options.profile_snrs.size() > 5)
        throw std::domain_error("run_sweep: MiProfile needs 1 to 5 SNR values");
      out.table.header = {"x1"};
      for (double a : options.profile_snrs)
        out.table.header.push_back("I_LB[a=" + format_sig12(a) + "]");
      eval = [&options](double x1) -> std::vector<CsvCell> {
        std::vector<CsvCell> row{x1};
        for (double a : options.profile_snrs) {
          if (x1 * x1 >= a)
            row.push_back(mi_closed(x1, Snr(a)));
          else
            row.push_back(std::nullopt);  // below sqrt(a): undefined
        }
        return row;
      };
      break;
    }
  }

  std::vector<RowResult> rows(xs.size());
  parallel_for(static_cast<int>(xs.size()), options.threads, [&](int i) {
    try {
      rows[i].cells = eval(xs[i]);
    } catch (const std::exception& e) {
      rows[i].cells.assign(out.table.header.size(), std::nullopt);
      rows[i].cells[0] = xs[i];
      rows[i].warning = "point " + format_sig12(xs[i]) + ": " + e.what();
    }
  });

  for (auto& r : rows) {
    out.table.rows.push_back(std::move(r.cells));
    if (!r.warning.empty()) {
      ++out.failed;
      out.warnings.push_back(std::move(r.warning));
    }
  }
  return out;
}

}  // namespace lowsnr
