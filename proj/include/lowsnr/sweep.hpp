#pragma once

#include <string>
#include <vector>

#include "lowsnr/csv.hpp"
#include "lowsnr/types.hpp"

namespace lowsnr {

struct SweepGrid {
  enum class Spacing { Log, Linear };

  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  Spacing spacing = Spacing::Log;

  /// Grid values in order; start < stop, points >= 2, Log needs start > 0.
  std::vector<double> values() const;
};

enum class Figure { MassPoint, Capacity, Penalty, Bounds, MiProfile };

struct SweepOptions {
  double a_max = 0.1;
  /// Fixed SNR values for the MiProfile figure (one curve per value, 1 to 5).
  std::vector<double> profile_snrs;
  /// Worker threads for grid evaluation; rows are emitted in grid order
  /// regardless of completion order.
  int threads = 0;  // 0 = hardware default
};

struct SweepOutcome {
  CsvTable table;
  int total = 0;
  int failed = 0;
  std::vector<std::string> warnings;
};

/// Evaluate one figure over the grid.  Per-point failures become empty cells
/// plus a warning; callers decide the exit status from failed/total.
SweepOutcome run_sweep(const SweepGrid& grid, Figure figure,
                       const SweepOptions& options = {});

}  // namespace lowsnr
