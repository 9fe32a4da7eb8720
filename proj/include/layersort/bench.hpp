// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "layersort/sorters.hpp"

namespace layersort {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<SortVariant> variants;
  std::vector<PivotStrategy> strategies;
  std::size_t runs_per_cell = 100;
  std::uint64_t base_seed = 1;
  Comparator comparator = Comparator::Integer;
  bool measure_time = false;  // timed cells run serially
  std::size_t threads = 0;    // 0 = LAYERSORT_THREADS or hardware
};

struct BenchCell {
  std::size_t n = 0;
  std::string variant;
  std::string strategy;
  double mean_comparisons = 0.0;
  double stddev_comparisons = 0.0;
  double stddev_percent = 0.0;
  double mean_moves = 0.0;
  double mean_wall_seconds = 0.0;  // 0 when not timed
  double normalized = 0.0;         // (mean - n lg n) / n
  std::vector<RunRecord> runs;
};

// Generates a fresh random permutation per run (seed derived by stable
// hashing of base seed, n, variant, strategy and run index) and sorts it.
// Deterministic for a given config regardless of thread count.
RunRecord bench_run(std::size_t n, SortVariant variant, const PivotStrategy& strategy,
                    std::uint64_t seed, Comparator comparator, bool timed);
std::uint64_t cell_run_seed(std::uint64_t base, std::size_t n, SortVariant variant,
                            const PivotStrategy& strategy, std::size_t run_index);

// Runs the whole grid. Throws ConfigError on an invalid configuration
// before any run starts. Variants that take no strategy contribute one
// series per size regardless of the strategy list.
std::vector<BenchCell> run_grid(const BenchConfig& config);

// Wide CSV: one row per n, one column per (variant,strategy) series with
// the normalized metric at 4 decimal places.
std::string to_wide_csv(const std::vector<BenchCell>& cells);

// Long CSV: one row per run with all raw fields, counts as exact integers.
std::string to_long_csv(const std::vector<BenchCell>& cells);
std::vector<RunRecord> parse_long_csv(const std::string& text);

// Recomputes cell aggregates from raw runs (used by the parse-back tests).
BenchCell aggregate_cell(std::size_t n, const std::string& variant, const std::string& strategy,
                         std::vector<RunRecord> runs);

}  // namespace layersort
