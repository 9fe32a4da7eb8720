// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "layersort/bench.hpp"
#include "layersort/parallel.hpp"

using namespace layersort;

namespace {

BenchConfig tiny_config() {
  BenchConfig c;
  c.sizes = {64, 256};
  c.variants = {SortVariant::QhsBasic, SortVariant::Quicksort};
  c.strategies = {PivotStrategy::fixed_sample(3)};
  c.runs_per_cell = 5;
  c.base_seed = 99;
  return c;
}

}  // namespace

TEST_CASE("run_grid is deterministic and independent of thread count") {
  BenchConfig c = tiny_config();
  c.threads = 1;
  auto once = run_grid(c);
  c.threads = 4;
  auto again = run_grid(c);
  REQUIRE(once.size() == again.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].runs == again[i].runs);
    CHECK(once[i].mean_comparisons == again[i].mean_comparisons);
  }
}

TEST_CASE("one-run cells have zero stddev") {
  BenchConfig c = tiny_config();
  c.runs_per_cell = 1;
  auto cells = run_grid(c);
  for (const auto& cell : cells) {
    CHECK(cell.stddev_comparisons == 0.0);
    CHECK(cell.stddev_percent == 0.0);
  }
}

TEST_CASE("config validation fails before any run") {
  BenchConfig c = tiny_config();
  c.runs_per_cell = 0;
  CHECK_THROWS_AS(run_grid(c), ConfigError);
  c = tiny_config();
  c.sizes = {256, 64};  // not ascending
  CHECK_THROWS_AS(run_grid(c), ConfigError);
  c = tiny_config();
  c.sizes.clear();
  CHECK_THROWS_AS(run_grid(c), ConfigError);
  c = tiny_config();
  c.strategies.clear();
  CHECK_THROWS_AS(run_grid(c), ConfigError);
  c = tiny_config();
  c.variants = {SortVariant::BottomUpHeapsort};
  c.strategies.clear();
  CHECK_NOTHROW(run_grid(c));  // strategy-less variants need no strategies
}

TEST_CASE("strategy-less variants contribute one series regardless of strategies") {
  BenchConfig c = tiny_config();
  c.sizes = {64};
  c.variants = {SortVariant::BottomUpHeapsort};
  c.strategies = {PivotStrategy::fixed_sample(1), PivotStrategy::fixed_sample(3)};
  auto cells = run_grid(c);
  CHECK(cells.size() == 1);
  CHECK(cells[0].strategy == "-");
  CHECK(cells[0].runs.size() == 5);
}

TEST_CASE("wide CSV shape") {
  BenchConfig c = tiny_config();
  auto cells = run_grid(c);
  std::string wide = to_wide_csv(cells);
  std::istringstream in(wide);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 3);  // header + one row per n
  CHECK(lines[0] == "n,qhs-basic:3,quicksort:3");
  CHECK(lines[1].substr(0, 3) == "64,");
  CHECK(lines[2].substr(0, 4) == "256,");
  // normalized metric printed with 4 decimals
  auto comma = lines[1].find(',');
  auto second = lines[1].find(',', comma + 1);
  std::string first_val = lines[1].substr(comma + 1, second - comma - 1);
  auto dot = first_val.find('.');
  REQUIRE(dot != std::string::npos);
  CHECK(first_val.size() - dot - 1 == 4);
}

TEST_CASE("long CSV round-trips runs exactly") {
  BenchConfig c = tiny_config();
  auto cells = run_grid(c);
  std::string text = to_long_csv(cells);
  auto parsed = parse_long_csv(text);
  std::vector<RunRecord> originals;
  for (const auto& cell : cells)
    for (const auto& r : cell.runs) originals.push_back(r);
  REQUIRE(parsed.size() == originals.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == originals[i]);

  // Aggregates recomputed from parsed runs match the originals exactly.
  std::size_t at = 0;
  for (const auto& cell : cells) {
    std::vector<RunRecord> runs(parsed.begin() + at, parsed.begin() + at + cell.runs.size());
    at += cell.runs.size();
    BenchCell re = aggregate_cell(cell.n, cell.variant, cell.strategy, std::move(runs));
    CHECK(re.mean_comparisons == cell.mean_comparisons);
    CHECK(re.stddev_comparisons == cell.stddev_comparisons);
    CHECK(re.normalized == cell.normalized);
  }
}

TEST_CASE("stddev percent definition") {
  std::vector<RunRecord> runs(2);
  runs[0].total = 90;
  runs[1].total = 110;
  BenchCell cell = aggregate_cell(100, "x", "y", std::move(runs));
  CHECK(cell.mean_comparisons == 100.0);
  CHECK(cell.stddev_percent == doctest::Approx(100.0 * cell.stddev_comparisons / 100.0));
}

TEST_CASE("expensive comparator: same orderings, larger wall time") {
  BenchConfig c;
  c.sizes = {100000};
  c.variants = {SortVariant::QhsImproved};
  c.strategies = {PivotStrategy::scheduled(Schedule::Sqrt)};
  c.runs_per_cell = 3;
  c.base_seed = 5;
  c.measure_time = true;

  c.comparator = Comparator::Integer;
  auto plain = run_grid(c);
  c.comparator = Comparator::Log4;
  auto pricey = run_grid(c);
  REQUIRE(plain.size() == 1);
  REQUIRE(pricey.size() == 1);
  // Orders are identical, so the comparison counts agree exactly.
  CHECK(plain[0].mean_comparisons == pricey[0].mean_comparisons);
  CHECK(pricey[0].mean_wall_seconds > plain[0].mean_wall_seconds);
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, 8, [&](std::size_t i) { ++hits[i]; });
  for (int h : hits) CHECK(h == 1);
}
