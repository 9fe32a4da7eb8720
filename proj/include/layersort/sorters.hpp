// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "layersort/meter.hpp"
#include "layersort/pivots.hpp"

namespace layersort {

enum class SortVariant {
  QhsBasic,
  QhsImproved,
  QhsBitArray,
  QhsHybrid,
  Quicksort,
  BottomUpHeapsort,
  MdrHeapsort,
  UltimateHeapsort,
};
std::string variant_name(SortVariant v);
std::optional<SortVariant> parse_variant(std::string_view text);
bool variant_uses_strategy(SortVariant v);

// Pivot source for one sorting run. The default implementation applies a
// PivotStrategy; the recording/replay pair makes paired experiments with
// identical pivot choices possible (pivots replayed by value, free of
// charge, so two variants can be compared on the same pivot sequence).
class PivotChooser {
 public:
  virtual ~PivotChooser() = default;
  virtual std::size_t choose(std::span<Key> window, ComparisonMeter& meter) = 0;
};

class StrategyPivotChooser : public PivotChooser {
 public:
  StrategyPivotChooser(const PivotStrategy& strategy, SeededRng& rng)
      : strategy_(strategy), rng_(rng) {}
  std::size_t choose(std::span<Key> window, ComparisonMeter& meter) override {
    return choose_pivot(window, strategy_, rng_, meter);
  }

 private:
  PivotStrategy strategy_;
  SeededRng& rng_;
};

class RecordingPivotChooser : public PivotChooser {
 public:
  RecordingPivotChooser(PivotChooser& inner, std::vector<Key>& log) : inner_(inner), log_(log) {}
  std::size_t choose(std::span<Key> window, ComparisonMeter& meter) override {
    std::size_t idx = inner_.choose(window, meter);
    log_.push_back(window[idx]);
    return idx;
  }

 private:
  PivotChooser& inner_;
  std::vector<Key>& log_;
};

// Replays recorded pivot values; requires distinct keys. Throws
// std::logic_error when a recorded value is absent from the window.
class ReplayPivotChooser : public PivotChooser {
 public:
  explicit ReplayPivotChooser(std::span<const Key> values) : values_(values) {}
  std::size_t choose(std::span<Key> window, ComparisonMeter& meter) override;

 private:
  std::span<const Key> values_;
  std::size_t next_ = 0;
};

enum class QhsFlavor { Basic, Improved, BitArrays };

struct SortStats {
  std::size_t heaps = 0;  // number of heaps built during the sort (t)
};

// QuickHeapsort: choose pivot, reverse-partition to k; the smaller side
// becomes a two-layer max heap (left of the pivot) or min heap (right),
// extracted into the far end of the larger side; pivot swapped to its final
// slot; iterate on the rest. The flavor selects plain, leaf-pair-ordered,
// or bit-array heap machinery.
void quickheapsort(std::span<Key> a, QhsFlavor flavor, PivotChooser& chooser,
                   ComparisonMeter& meter, SortStats* stats = nullptr);

// As quickheapsort (improved flavor), but once a partition lands outside
// [ceil(n/4), floor(3n/4)] the rest of that subproblem runs with exact
// median pivots, which caps the worst case at n lg n + O(n).
void quickheapsort_hybrid(std::span<Key> a, PivotChooser& chooser, SeededRng& rng,
                          ComparisonMeter& meter, SortStats* stats = nullptr);

// QuickHeapsort with the exact median of the remaining subarray as every
// pivot. The median is found by a quickselect on sqrt-size sample medians
// that falls back to the deterministic median-of-medians select when it
// exceeds its round budget, so the whole sort stays O(n lg n) worst case.
// The selection leaves the subarray partitioned, standing in for that
// round's partitioning pass.
void ultimate_heapsort(std::span<Key> a, SeededRng& rng, ComparisonMeter& meter,
                       SortStats* stats = nullptr);

// Classic two-sided sampled quicksort with no small-subarray cutoff: the
// sample is sorted in place (recursively), its middle element becomes the
// pivot, and the ascending partition scan covers the n - s elements the
// sorted sample has not already classified. Matches the classic
// median-of-3 comparison count at fixed sample size 3.
void quicksort(std::span<Key> a, const PivotStrategy& strategy, SeededRng& rng,
               ComparisonMeter& meter);

// Heapsort with bottom-up sift-down (leaf search first, then the upward
// search); Floyd construction.
void bottom_up_heapsort(std::span<Key> a, ComparisonMeter& meter);

// Bottom-up heapsort augmented with a CompareArray that records and reuses
// sibling comparisons throughout construction and sorting.
void mdr_heapsort(std::span<Key> a, ComparisonMeter& meter);

// Runs one seeded sort of the given variant over a and reports the
// phase-tagged counts. The seed drives all pivot sampling.
RunRecord sort(std::span<Key> a, SortVariant variant, const PivotStrategy& strategy,
               std::uint64_t seed, Comparator comparator = Comparator::Integer,
               bool timed = false);

}  // namespace layersort
