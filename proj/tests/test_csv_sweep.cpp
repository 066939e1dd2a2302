#include <cmath>

#include <doctest.h>

#include "lowsnr/csv.hpp"
#include "lowsnr/sweep.hpp"

using namespace lowsnr;

TEST_CASE("format_sig12") {
  CHECK(format_sig12(0.5) == "0.5");
  CHECK(format_sig12(1e-3) == "0.001");
  CHECK(format_sig12(4.9216373492971763) == "4.9216373493");
  CHECK(format_sig12(-1.0) == "-1");
}

TEST_CASE("csv round trip is byte identical") {
  CsvTable t;
  t.header = {"a", "x1", "note"};
  t.rows.push_back({1e-3, 2.2184763576, 0.0});
  t.rows.push_back({2.5e-4, std::nullopt, -1.0});
  const std::string text = to_csv(t);
  CHECK(text.back() == '\n');
  CHECK(text.find("\r") == std::string::npos);
  const ParsedCsv parsed = parse_csv(text);
  CHECK(parsed.header.size() == 3);
  CHECK(parsed.rows.size() == 2);
  CHECK(parsed.rows[1][1].empty());
  CHECK(serialize_csv(parsed) == text);
}

TEST_CASE("sweep grid construction") {
  SweepGrid log_grid{1e-4, 1e-2, 3, SweepGrid::Spacing::Log};
  const auto lv = log_grid.values();
  CHECK(lv.size() == 3);
  CHECK(lv[0] == 1e-4);
  CHECK(lv[1] == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(lv[2] == 1e-2);

  SweepGrid lin_grid{0.0, 1.0, 5, SweepGrid::Spacing::Linear};
  const auto nv = lin_grid.values();
  CHECK(nv[2] == doctest::Approx(0.5));

  CHECK_THROWS_AS((SweepGrid{1.0, 0.5, 3, SweepGrid::Spacing::Log}.values()),
                  std::domain_error);
  CHECK_THROWS_AS((SweepGrid{0.0, 1.0, 3, SweepGrid::Spacing::Log}.values()),
                  std::domain_error);
  CHECK_THROWS_AS((SweepGrid{0.0, 1.0, 1, SweepGrid::Spacing::Linear}.values()),
                  std::domain_error);
}

TEST_CASE("masspoint sweep columns agree at low SNR") {
  SweepGrid grid{1e-5, 1e-3, 5, SweepGrid::Spacing::Log};
  const SweepOutcome out = run_sweep(grid, Figure::MassPoint);
  CHECK(out.failed == 0);
  CHECK(out.table.header ==
        std::vector<std::string>{"a", "x1_fixedpoint", "x1_numericmax"});
  for (const auto& row : out.table.rows) {
    REQUIRE(row.size() == 3);
    REQUIRE(row[1].has_value());
    REQUIRE(row[2].has_value());
    CHECK(std::fabs(*row[1] - *row[2]) / *row[1] <= 1e-2);
  }
}

TEST_CASE("bounds sweep rows satisfy the mass-point sandwich") {
  SweepGrid grid{2e-6, 5e-2, 8, SweepGrid::Spacing::Log};
  const SweepOutcome out = run_sweep(grid, Figure::Bounds);
  CHECK(out.failed == 0);
  for (const auto& row : out.table.rows) {
    REQUIRE(row.size() == 4);
    CHECK(*row[1] <= *row[2]);
    CHECK(*row[2] <= *row[3]);
  }
}

TEST_CASE("per-point failures become empty cells with warnings") {
  // the top of this grid exceeds a_max, so those points must fail gracefully
  SweepGrid grid{5e-2, 0.4, 6, SweepGrid::Spacing::Log};
  const SweepOutcome out = run_sweep(grid, Figure::Penalty);
  CHECK(out.failed > 0);
  CHECK(out.failed < out.total);
  CHECK(out.warnings.size() == static_cast<std::size_t>(out.failed));
  int empties = 0;
  for (const auto& row : out.table.rows) {
    REQUIRE(row[0].has_value());  // the abscissa survives
    if (!row[1].has_value()) ++empties;
  }
  CHECK(empties == out.failed);
}

TEST_CASE("parallel sweep is deterministic and ordered") {
  SweepGrid grid{1e-6, 1e-2, 12, SweepGrid::Spacing::Log};
  SweepOptions opts;
  opts.threads = 4;
  const std::string csv1 = to_csv(run_sweep(grid, Figure::Capacity, opts).table);
  const std::string csv2 = to_csv(run_sweep(grid, Figure::Capacity, opts).table);
  CHECK(csv1 == csv2);
  // rows in grid order
  const ParsedCsv parsed = parse_csv(csv1);
  double prev = 0.0;
  for (const auto& row : parsed.rows) {
    const double a = std::stod(row[0]);
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("miprofile sweep shape") {
  SweepGrid grid{1.2, 6.0, 7, SweepGrid::Spacing::Linear};
  SweepOptions opts;
  opts.profile_snrs = {1e-4, 1e-2};
  const SweepOutcome out = run_sweep(grid, Figure::MiProfile, opts);
  CHECK(out.table.header.size() == 3);
  CHECK(out.failed == 0);
  // each curve has an interior maximum over the x1 range
  for (std::size_t col = 1; col <= 2; ++col) {
    double best = -1.0;
    std::size_t best_row = 0;
    for (std::size_t r = 0; r < out.table.rows.size(); ++r) {
      const double v = *out.table.rows[r][col];
      if (v > best) {
        best = v;
        best_row = r;
      }
    }
    CHECK(best_row > 0);
    CHECK(best_row < out.table.rows.size() - 1);
  }
  SweepOptions none;
  CHECK_THROWS_AS(run_sweep(grid, Figure::MiProfile, none), std::domain_error);
}
