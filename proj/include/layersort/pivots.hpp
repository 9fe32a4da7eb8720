// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "layersort/meter.hpp"

namespace layersort {

// Sample-size schedules f(n), evaluated per call on the current subarray size.
enum class Schedule { LgN, FourthRoot, SqrtOverLg, Sqrt, ThreeQuarters };
double schedule_value(Schedule s, std::size_t n);

// How the pivot sample is drawn and its median selected. Fixed sizes 1 and 3,
// the growing schedules, or the exact median of the whole subarray found with
// a median-of-medians select.
struct PivotStrategy {
  enum class Kind { FixedSample, Scheduled, ExactMedianOfMedians };
  Kind kind = Kind::FixedSample;
  int fixed = 1;
  Schedule schedule = Schedule::Sqrt;

  static PivotStrategy fixed_sample(int p);
  static PivotStrategy scheduled(Schedule s);
  static PivotStrategy exact_median_of_medians();

  // Odd sample size in [1, n]; even schedule values round up to the next odd.
  std::size_t sample_size(std::size_t n) const;
  std::string name() const;
  static std::optional<PivotStrategy> parse(std::string_view text);
  bool operator==(const PivotStrategy&) const = default;
};

// Descending partition. Rearranges a so that a[i] >= a[k-1] for i < k-1,
// a[k-1] is the pivot value, and a[j] <= a[k-1] for j >= k. Returns the
// 1-based pivot position k. Uses exactly n-1 comparisons. Throws
// std::invalid_argument on an empty array.
std::size_t partition_reverse(std::span<Key> a, std::size_t pivot_index, ComparisonMeter& meter);

// Ascending twin with the identical n-1 comparison count (used by quicksort).
std::size_t partition_forward(std::span<Key> a, std::size_t pivot_index, ComparisonMeter& meter);

// Median of 3 resp. 5 positions of a, by index, returning the median's index.
// median5_index uses the classic selection procedure and never exceeds 6
// comparisons. Both leave the elements where they are.
std::size_t median3_index(std::span<Key> a, std::size_t i, std::size_t j, std::size_t k,
                          ComparisonMeter& meter);
std::size_t median5_index(std::span<Key> a, const std::size_t idx[5], ComparisonMeter& meter);

// Returns the index of the pivot chosen by the strategy. Draws sample
// indices without replacement, swaps the sample to the front of a, and
// selects its median in place; everything is billed to the pivot phase.
// The array may be permuted; the subsequent partition handles any
// arrangement. For ExactMedianOfMedians the element at the returned index
// is the exact median of a.
std::size_t choose_pivot(std::span<Key> a, const PivotStrategy& strategy, SeededRng& rng,
                         ComparisonMeter& meter);

// Selects the rank-th smallest (1-based) element; the array is permuted so
// that the result ends up at the returned index with everything before it
// >= it and everything after <= it. Uses partition_reverse and the same
// strategy recursively. Throws std::out_of_range on a bad rank.
std::size_t quickselect_index(std::span<Key> a, std::size_t rank, const PivotStrategy& strategy,
                              SeededRng& rng, ComparisonMeter& meter);
Key quickselect(std::span<Key> a, std::size_t rank, const PivotStrategy& strategy, SeededRng& rng,
                ComparisonMeter& meter);

// Deterministic worst-case-linear select of the rank-th smallest element:
// groups of five, each group median in at most 6 comparisons, the median of
// the medians (selected recursively) as partition pivot. Returns the final
// index of the requested element; partitions like quickselect_index.
std::size_t mom_select_index(std::span<Key> a, std::size_t rank, ComparisonMeter& meter);

// Exact median of a via mom_select_index (Ultimate Heapsort mode).
std::size_t median_of_medians(std::span<Key> a, ComparisonMeter& meter);

// Appendix-style sampled variant: draws ceil(n / fraction) random elements
// to the front and returns the index of their exact median.
std::size_t median_of_medians_sampled(std::span<Key> a, double fraction, SeededRng& rng,
                                      ComparisonMeter& meter);

// Exact distribution of the pivot rank when the pivot is the median of
// 2c+1 elements sampled without replacement from n distinct keys.
struct PivotRankDistribution {
  std::size_t n = 0;
  std::size_t c = 0;
  std::vector<double> probabilities;  // probabilities[k-1] = Pr[pivot rank = k]

  // Pr[pivot rank <= x] for real x.
  double tail_at_most(double x) const;
};
PivotRankDistribution pivot_rank_distribution(std::size_t n, std::size_t c);

}  // namespace layersort
