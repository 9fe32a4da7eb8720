// SPDX-License-Identifier: Apache-2.0
#include "layersort/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "layersort/parallel.hpp"

namespace layersort {

std::size_t resolve_thread_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LAYERSORT_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v >= 1) return static_cast<std::size_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

RunRecord bench_run(std::size_t n, SortVariant variant, const PivotStrategy& strategy,
                    std::uint64_t seed, Comparator comparator, bool timed) {
  SeededRng gen(seed);
  std::vector<Key> data = random_permutation(gen, n);
  return sort(std::span<Key>(data), variant, strategy, seed, comparator, timed);
}

std::uint64_t cell_run_seed(std::uint64_t base, std::size_t n, SortVariant variant,
                            const PivotStrategy& strategy, std::size_t run_index) {
  std::uint64_t h = mix_seed(base, 0x6c617965ULL);  // grid tag
  h = mix_seed(h, n);
  h = mix_seed(h, static_cast<std::uint64_t>(variant));
  for (char ch : strategy.name()) h = mix_seed(h, static_cast<std::uint64_t>(ch));
  h = mix_seed(h, run_index);
  return h;
}

namespace {

struct CellKey {
  std::size_t n;
  SortVariant variant;
  PivotStrategy strategy;
  bool has_strategy;
};

std::vector<CellKey> plan_cells(const BenchConfig& config) {
  std::vector<CellKey> cells;
  for (std::size_t n : config.sizes) {
    for (SortVariant v : config.variants) {
      if (variant_uses_strategy(v)) {
        for (const PivotStrategy& s : config.strategies) cells.push_back({n, v, s, true});
      } else {
        cells.push_back({n, v, PivotStrategy::fixed_sample(1), false});
      }
    }
  }
  return cells;
}

void validate(const BenchConfig& config) {
  if (config.sizes.empty()) throw ConfigError("no sizes given");
  if (config.variants.empty()) throw ConfigError("no variants given");
  if (config.runs_per_cell < 1) throw ConfigError("runs per cell must be >= 1");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end()))
    throw ConfigError("sizes must be ascending");
  bool needs_strategy = false;
  for (SortVariant v : config.variants) needs_strategy |= variant_uses_strategy(v);
  if (needs_strategy && config.strategies.empty())
    throw ConfigError("strategied variants present but no strategies given");
}

}  // namespace

BenchCell aggregate_cell(std::size_t n, const std::string& variant, const std::string& strategy,
                         std::vector<RunRecord> runs) {
  BenchCell cell;
  cell.n = n;
  cell.variant = variant;
  cell.strategy = strategy;
  const double count = static_cast<double>(runs.size());
  double mean = 0.0, mean_moves = 0.0, mean_wall = 0.0;
  for (const RunRecord& r : runs) {
    mean += static_cast<double>(r.total);
    mean_moves += static_cast<double>(r.moves);
    if (r.wall_seconds) mean_wall += *r.wall_seconds;
  }
  mean /= count;
  mean_moves /= count;
  mean_wall /= count;
  double var = 0.0;
  for (const RunRecord& r : runs) {
    double d = static_cast<double>(r.total) - mean;
    var += d * d;
  }
  var = runs.size() > 1 ? var / (count - 1.0) : 0.0;
  cell.mean_comparisons = mean;
  cell.stddev_comparisons = std::sqrt(var);
  cell.stddev_percent = mean > 0 ? 100.0 * cell.stddev_comparisons / mean : 0.0;
  cell.mean_moves = mean_moves;
  cell.mean_wall_seconds = mean_wall;
  double dn = static_cast<double>(n);
  cell.normalized = dn > 0 ? (mean - dn * std::log2(dn)) / dn : 0.0;
  cell.runs = std::move(runs);
  return cell;
}

std::vector<BenchCell> run_grid(const BenchConfig& config) {
  validate(config);
  std::vector<CellKey> keys = plan_cells(config);
  struct Slot {
    std::size_t cell;
    std::size_t run;
  };
  std::vector<Slot> slots;
  slots.reserve(keys.size() * config.runs_per_cell);
  for (std::size_t c = 0; c < keys.size(); ++c)
    for (std::size_t r = 0; r < config.runs_per_cell; ++r) slots.push_back({c, r});

  std::vector<std::vector<RunRecord>> results(keys.size(),
                                              std::vector<RunRecord>(config.runs_per_cell));
  std::size_t threads = config.measure_time ? 1 : resolve_thread_count(config.threads);
  parallel_for(slots.size(), threads, [&](std::size_t i) {
    const Slot& s = slots[i];
    const CellKey& key = keys[s.cell];
    std::uint64_t seed = cell_run_seed(config.base_seed, key.n, key.variant, key.strategy, s.run);
    results[s.cell][s.run] =
        bench_run(key.n, key.variant, key.strategy, seed, config.comparator, config.measure_time);
  });

  std::vector<BenchCell> cells;
  cells.reserve(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    const CellKey& key = keys[c];
    std::string strat = key.has_strategy ? key.strategy.name() : "-";
    cells.push_back(aggregate_cell(key.n, variant_name(key.variant), strat,
                                   std::move(results[c])));
  }
  return cells;
}

namespace {

std::string format_normalized(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_wide_csv(const std::vector<BenchCell>& cells) {
  // Column per (variant,strategy) series, row per n, in first-seen order.
  std::vector<std::string> series;
  std::vector<std::size_t> sizes;
  for (const BenchCell& c : cells) {
    std::string name = c.variant + ":" + c.strategy;
    if (std::find(series.begin(), series.end(), name) == series.end()) series.push_back(name);
    if (std::find(sizes.begin(), sizes.end(), c.n) == sizes.end()) sizes.push_back(c.n);
  }
  std::ostringstream out;
  out << "n";
  for (const auto& s : series) out << "," << s;
  out << "\n";
  for (std::size_t n : sizes) {
    out << n;
    for (const auto& s : series) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const BenchCell& c) {
        return c.n == n && c.variant + ":" + c.strategy == s;
      });
      out << ",";
      if (it != cells.end()) out << format_normalized(it->normalized);
    }
    out << "\n";
  }
  return out.str();
}

std::string to_long_csv(const std::vector<BenchCell>& cells) {
  std::ostringstream out;
  out << "n,variant,strategy,run,seed,pivot,partition,construction,extraction,total,moves,heaps,"
         "wall_s\n";
  for (const BenchCell& cell : cells) {
    for (std::size_t i = 0; i < cell.runs.size(); ++i) {
      const RunRecord& r = cell.runs[i];
      out << r.n << "," << r.variant << "," << r.strategy << "," << i << "," << r.seed << ","
          << r.pivot << "," << r.partition << "," << r.construction << "," << r.extraction << ","
          << r.total << "," << r.moves << "," << r.heaps << ",";
      if (r.wall_seconds) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", *r.wall_seconds);
        out << buf;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::vector<RunRecord> parse_long_csv(const std::string& text) {
  std::vector<RunRecord> runs;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto f = split_csv_line(line);
    if (f.size() != 13) throw std::runtime_error("long CSV: bad field count");
    RunRecord r;
    r.n = std::stoull(f[0]);
    r.variant = f[1];
    r.strategy = f[2];
    r.seed = std::stoull(f[4]);
    r.pivot = std::stoull(f[5]);
    r.partition = std::stoull(f[6]);
    r.construction = std::stoull(f[7]);
    r.extraction = std::stoull(f[8]);
    r.total = std::stoull(f[9]);
    r.moves = std::stoull(f[10]);
    r.heaps = std::stoull(f[11]);
    if (!f[12].empty()) r.wall_seconds = std::stod(f[12]);
    runs.push_back(std::move(r));
  }
  return runs;
}

}  // namespace layersort
