// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace layersort {

using Key = std::int64_t;

enum class Phase : int { Pivot = 0, Partition = 1, Construction = 2, Extraction = 3 };
inline constexpr int kPhaseCount = 4;
const char* phase_name(Phase p);

// Comparison functions the meter can wrap. Log4 applies lg four times to
// x + 2^16 before comparing; the offset keeps all four logarithms defined
// for non-negative keys and the map is strictly increasing, so orderings
// are unchanged. It exists to make comparisons expensive in wall-time runs.
enum class Comparator { Integer, Log4 };
double log4_map(Key x);

// Counts comparisons and element moves, tagged with the currently active
// phase. Every comparison any algorithm in this library performs goes
// through compare() (or the relational helpers) of exactly one meter.
class ComparisonMeter {
 public:
  explicit ComparisonMeter(Comparator cmp = Comparator::Integer) : comparator_(cmp) {}

  // Three-way result: <0, 0, >0. Bills one comparison to the active phase.
  int compare(Key a, Key b) {
    ++comparisons_[static_cast<int>(phase_)];
    if (comparator_ == Comparator::Integer) return a < b ? -1 : (a > b ? 1 : 0);
    double fa = log4_map(a), fb = log4_map(b);
    return fa < fb ? -1 : (fa > fb ? 1 : 0);
  }
  bool less(Key a, Key b) { return compare(a, b) < 0; }
  bool greater(Key a, Key b) { return compare(a, b) > 0; }
  bool less_equal(Key a, Key b) { return compare(a, b) <= 0; }
  bool greater_equal(Key a, Key b) { return compare(a, b) >= 0; }

  void set_phase(Phase p) { phase_ = p; }
  Phase phase() const { return phase_; }

  // A move is one assignment of an element into an array slot.
  void count_move() { ++moves_[static_cast<int>(phase_)]; }

  std::uint64_t comparisons(Phase p) const { return comparisons_[static_cast<int>(p)]; }
  std::uint64_t moves(Phase p) const { return moves_[static_cast<int>(p)]; }
  std::uint64_t total_comparisons() const {
    std::uint64_t t = 0;
    for (auto c : comparisons_) t += c;
    return t;
  }
  std::uint64_t total_moves() const {
    std::uint64_t t = 0;
    for (auto c : moves_) t += c;
    return t;
  }
  void reset() {
    comparisons_.fill(0);
    moves_.fill(0);
  }
  Comparator comparator() const { return comparator_; }

  // Optional per-heap diagnostics, filled by the QuickHeapsort engine when a
  // sink is attached. Tests use this for the per-heap extraction bounds.
  struct HeapTrace {
    std::size_t m = 0;
    std::uint64_t construction = 0;  // Floyd or MDR comparisons for this heap
    std::uint64_t ordering = 0;      // leaf-pair ordering comparisons
    std::uint64_t extraction = 0;
  };
  std::vector<HeapTrace>* heap_trace = nullptr;

 private:
  std::array<std::uint64_t, kPhaseCount> comparisons_{};
  std::array<std::uint64_t, kPhaseCount> moves_{};
  Phase phase_ = Phase::Partition;
  Comparator comparator_;
};

// Sets the meter's phase for the current scope and restores the previous
// one on exit. Pivot selection wraps itself in one of these so nested
// machinery (sampling, selection partitions) bills to the pivot phase.
class PhaseScope {
 public:
  PhaseScope(ComparisonMeter& meter, Phase p) : meter_(meter), saved_(meter.phase()) {
    meter_.set_phase(p);
  }
  ~PhaseScope() { meter_.set_phase(saved_); }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  ComparisonMeter& meter_;
  Phase saved_;
};

// Seeded generator with a fully pinned draw path: identical seeds give
// identical sequences on every platform. Bounded draws use rejection
// sampling on top of mt19937_64 rather than std distributions, whose
// algorithms the standard leaves open.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  // Uniform draw from [0, n). n must be >= 1.
  std::size_t below(std::size_t n) {
    const std::uint64_t un = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    for (;;) {
      std::uint64_t r = engine_();
      if (r < limit) return static_cast<std::size_t>(r % un);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

// Uniformly random permutation of the keys 1..n.
std::vector<Key> random_permutation(SeededRng& rng, std::size_t n);

// Stable seed mixing for deriving per-run seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// One benchmark run: phase-tagged comparison counts plus bookkeeping.
// total is always the sum of the four phase counts.
struct RunRecord {
  std::size_t n = 0;
  std::string variant;
  std::string strategy;
  std::uint64_t seed = 0;
  std::uint64_t pivot = 0;
  std::uint64_t partition = 0;
  std::uint64_t construction = 0;
  std::uint64_t extraction = 0;
  std::uint64_t total = 0;
  std::uint64_t moves = 0;
  std::size_t heaps = 0;  // number of heaps built (t)
  std::optional<double> wall_seconds;

  static RunRecord from_meter(const ComparisonMeter& meter);
  bool operator==(const RunRecord&) const = default;
};

}  // namespace layersort
