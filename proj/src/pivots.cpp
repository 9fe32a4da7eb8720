// SPDX-License-Identifier: Apache-2.0
#include "layersort/pivots.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace layersort {

double schedule_value(Schedule s, std::size_t n) {
  double x = static_cast<double>(n);
  switch (s) {
    // Natural log: keeps the log schedule strictly below n^{1/4} at the
    // benchmark sizes, which the stddev ordering of the strategy table
    // depends on.
    case Schedule::LgN: return std::log(x);
    case Schedule::FourthRoot: return std::pow(x, 0.25);
    case Schedule::SqrtOverLg: return n >= 3 ? std::sqrt(x / std::log2(x)) : 1.0;
    case Schedule::Sqrt: return std::sqrt(x);
    case Schedule::ThreeQuarters: return std::pow(x, 0.75);
  }
  return 1.0;
}

PivotStrategy PivotStrategy::fixed_sample(int p) {
  PivotStrategy s;
  s.kind = Kind::FixedSample;
  s.fixed = p;
  return s;
}
PivotStrategy PivotStrategy::scheduled(Schedule sch) {
  PivotStrategy s;
  s.kind = Kind::Scheduled;
  s.schedule = sch;
  return s;
}
PivotStrategy PivotStrategy::exact_median_of_medians() {
  PivotStrategy s;
  s.kind = Kind::ExactMedianOfMedians;
  return s;
}

std::size_t PivotStrategy::sample_size(std::size_t n) const {
  if (n == 0) return 0;
  double raw;
  switch (kind) {
    case Kind::FixedSample: raw = static_cast<double>(fixed); break;
    case Kind::Scheduled: raw = schedule_value(schedule, n); break;
    case Kind::ExactMedianOfMedians: return n;
  }
  long long s = std::llround(raw);
  if (s < 1) s = 1;
  if (s % 2 == 0) ++s;  // round even values up to the next odd
  std::size_t cap = (n % 2 == 1) ? n : n - 1;
  if (static_cast<std::size_t>(s) > cap) return cap == 0 ? 1 : cap;
  return static_cast<std::size_t>(s);
}

std::string PivotStrategy::name() const {
  switch (kind) {
    case Kind::FixedSample: return std::to_string(fixed);
    case Kind::Scheduled:
      switch (schedule) {
        case Schedule::LgN: return "lg";
        case Schedule::FourthRoot: return "n14";
        case Schedule::SqrtOverLg: return "sqrtlg";
        case Schedule::Sqrt: return "sqrt";
        case Schedule::ThreeQuarters: return "n34";
      }
      return "?";
    case Kind::ExactMedianOfMedians: return "mom";
  }
  return "?";
}

std::optional<PivotStrategy> PivotStrategy::parse(std::string_view text) {
  if (text == "1") return fixed_sample(1);
  if (text == "3") return fixed_sample(3);
  if (text == "lg") return scheduled(Schedule::LgN);
  if (text == "n14") return scheduled(Schedule::FourthRoot);
  if (text == "sqrtlg") return scheduled(Schedule::SqrtOverLg);
  if (text == "sqrt") return scheduled(Schedule::Sqrt);
  if (text == "n34") return scheduled(Schedule::ThreeQuarters);
  if (text == "mom") return exact_median_of_medians();
  return std::nullopt;
}

namespace {

void swap_slots(std::span<Key> a, std::size_t i, std::size_t j, ComparisonMeter& meter) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  meter.count_move();
  meter.count_move();
}

}  // namespace

std::size_t partition_reverse(std::span<Key> a, std::size_t pivot_index, ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("partition_reverse: empty array");
  if (pivot_index >= n) throw std::invalid_argument("partition_reverse: pivot index out of range");
  swap_slots(a, pivot_index, n - 1, meter);
  const Key pivot = a[n - 1];
  std::size_t store = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (meter.greater_equal(a[i], pivot)) {
      swap_slots(a, i, store, meter);
      ++store;
    }
  }
  swap_slots(a, store, n - 1, meter);
  return store + 1;
}

std::size_t partition_forward(std::span<Key> a, std::size_t pivot_index, ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("partition_forward: empty array");
  if (pivot_index >= n) throw std::invalid_argument("partition_forward: pivot index out of range");
  swap_slots(a, pivot_index, n - 1, meter);
  const Key pivot = a[n - 1];
  std::size_t store = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (meter.less_equal(a[i], pivot)) {
      swap_slots(a, i, store, meter);
      ++store;
    }
  }
  swap_slots(a, store, n - 1, meter);
  return store + 1;
}

std::size_t median3_index(std::span<Key> a, std::size_t i, std::size_t j, std::size_t k,
                          ComparisonMeter& meter) {
  // Order (i,j), then place k.
  if (meter.greater(a[i], a[j])) std::swap(i, j);
  if (meter.less_equal(a[k], a[i])) return i;
  if (meter.less_equal(a[k], a[j])) return k;
  return j;
}

std::size_t median5_index(std::span<Key> a, const std::size_t idx[5], ComparisonMeter& meter) {
  std::size_t p0 = idx[0], p1 = idx[1], p2 = idx[2], p3 = idx[3], p4 = idx[4];
  if (meter.greater(a[p0], a[p1])) std::swap(p0, p1);  // a[p0] <= a[p1]
  if (meter.greater(a[p2], a[p3])) std::swap(p2, p3);  // a[p2] <= a[p3]
  if (meter.greater(a[p0], a[p2])) {                   // make p0 the smaller minimum
    std::swap(p0, p2);
    std::swap(p1, p3);
  }
  // a[p0] is below three others: it cannot be the median. The median of all
  // five is the second smallest of {p1, p2, p3, p4}, with a[p2] <= a[p3].
  if (meter.greater(a[p1], a[p4])) std::swap(p1, p4);  // a[p1] <= a[p4]
  if (meter.greater(a[p1], a[p2])) {
    // a[p2] is the minimum of the four; second smallest = min(p1, p3)
    return meter.less_equal(a[p1], a[p3]) ? p1 : p3;
  }
  // a[p1] is the minimum; second smallest = min(p4, p2)
  return meter.less_equal(a[p4], a[p2]) ? p4 : p2;
}

namespace {

// Median of up to 5 elements sitting at a[lo..lo+len), len in 1..5.
std::size_t small_median_index(std::span<Key> a, std::size_t lo, std::size_t len,
                               ComparisonMeter& meter) {
  switch (len) {
    case 1: return lo;
    case 2: return meter.less_equal(a[lo], a[lo + 1]) ? lo : lo + 1;  // lower median
    case 3: return median3_index(a, lo, lo + 1, lo + 2, meter);
    case 4: {
      // lower median (2nd smallest) of four
      std::size_t p0 = lo, p1 = lo + 1, p2 = lo + 2, p3 = lo + 3;
      if (meter.greater(a[p0], a[p1])) std::swap(p0, p1);
      if (meter.greater(a[p2], a[p3])) std::swap(p2, p3);
      if (meter.greater(a[p0], a[p2])) {
        std::swap(p0, p2);
        std::swap(p1, p3);
      }
      return meter.less_equal(a[p1], a[p2]) ? p1 : p2;
    }
    default: {
      std::size_t idx[5] = {lo, lo + 1, lo + 2, lo + 3, lo + 4};
      return median5_index(a, idx, meter);
    }
  }
}

// Insertion sort on a[lo..hi), counting comparisons and moves.
void insertion_sort(std::span<Key> a, std::size_t lo, std::size_t hi, ComparisonMeter& meter) {
  for (std::size_t i = lo + 1; i < hi; ++i) {
    Key v = a[i];
    std::size_t j = i;
    while (j > lo && meter.greater(a[j - 1], v)) {
      a[j] = a[j - 1];
      meter.count_move();
      --j;
    }
    if (j != i) {
      a[j] = v;
      meter.count_move();
    }
  }
}

}  // namespace

std::size_t choose_pivot(std::span<Key> a, const PivotStrategy& strategy, SeededRng& rng,
                         ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("choose_pivot: empty array");
  PhaseScope scope(meter, Phase::Pivot);
  if (strategy.kind == PivotStrategy::Kind::ExactMedianOfMedians)
    return median_of_medians(a, meter);

  const std::size_t s = strategy.sample_size(n);
  if (s == 1) return rng.below(n);
  // Partial Fisher-Yates: the sample ends up at a[0..s), drawn without
  // replacement; nothing is restored afterwards.
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t j = i + rng.below(n - i);
    swap_slots(a, i, j, meter);
  }
  if (s <= 5) return small_median_index(a, 0, s, meter);
  // The sample median itself is selected with sqrt-size sample pivots, the
  // cost-optimal choice for selection; this keeps the median-of-f(n) cost
  // at 2 f(n) + o(f(n)) even for fast-growing schedules.
  return quickselect_index(a.first(s), (s + 1) / 2,
                           PivotStrategy::scheduled(Schedule::Sqrt), rng, meter);
}

std::size_t quickselect_index(std::span<Key> a, std::size_t rank, const PivotStrategy& strategy,
                              SeededRng& rng, ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (rank < 1 || rank > n) throw std::out_of_range("quickselect: rank out of range");
  std::size_t lo = 0, hi = n;
  std::size_t d = n - rank + 1;  // descending rank within [lo, hi)
  for (;;) {
    const std::size_t len = hi - lo;
    if (len == 1) return lo;
    auto window = a.subspan(lo, len);
    std::size_t pidx = choose_pivot(window, strategy, rng, meter);
    std::size_t k = partition_reverse(window, pidx, meter);
    if (d == k) return lo + k - 1;
    if (d < k) {
      hi = lo + k - 1;
    } else {
      lo += k;
      d -= k;
    }
  }
}

Key quickselect(std::span<Key> a, std::size_t rank, const PivotStrategy& strategy, SeededRng& rng,
                ComparisonMeter& meter) {
  return a[quickselect_index(a, rank, strategy, rng, meter)];
}

std::size_t mom_select_index(std::span<Key> a, std::size_t rank, ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (rank < 1 || rank > n) throw std::out_of_range("mom_select: rank out of range");
  std::size_t lo = 0, hi = n;
  std::size_t d = n - rank + 1;  // descending rank
  for (;;) {
    const std::size_t len = hi - lo;
    if (len == 1) return lo;
    auto window = a.subspan(lo, len);
    std::size_t pidx;
    if (len <= 5) {
      insertion_sort(a, lo, hi, meter);
      return lo + (len - d);  // d-th largest of a sorted ascending window
    }
    // Group medians move to the front of the window, then the median of the
    // medians (found by this same select) becomes the partition pivot.
    std::size_t groups = 0;
    for (std::size_t g = 0; g + 5 <= len; g += 5) {
      std::size_t idx[5] = {g, g + 1, g + 2, g + 3, g + 4};
      std::size_t med = median5_index(window, idx, meter);
      swap_slots(window, groups, med, meter);
      ++groups;
    }
    std::size_t rest = len % 5;
    if (rest != 0) {
      std::size_t med = small_median_index(window, len - rest, rest, meter);
      swap_slots(window, groups, med, meter);
      ++groups;
    }
    pidx = mom_select_index(window.first(groups), (groups + 1) / 2, meter);
    std::size_t k = partition_reverse(window, pidx, meter);
    if (d == k) return lo + k - 1;
    if (d < k) {
      hi = lo + k - 1;
    } else {
      lo += k;
      d -= k;
    }
  }
}

std::size_t median_of_medians(std::span<Key> a, ComparisonMeter& meter) {
  if (a.empty()) throw std::invalid_argument("median_of_medians: empty array");
  return mom_select_index(a, (a.size() + 1) / 2, meter);
}

std::size_t median_of_medians_sampled(std::span<Key> a, double fraction, SeededRng& rng,
                                      ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("median_of_medians_sampled: empty array");
  if (fraction < 1.0) throw std::invalid_argument("median_of_medians_sampled: fraction < 1");
  auto s = static_cast<std::size_t>(std::ceil(static_cast<double>(n) / fraction));
  if (s < 1) s = 1;
  if (s > n) s = n;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t j = i + rng.below(n - i);
    swap_slots(a, i, j, meter);
  }
  return mom_select_index(a.first(s), (s + 1) / 2, meter);
}

double PivotRankDistribution::tail_at_most(double x) const {
  double sum = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (static_cast<double>(k) <= x) sum += probabilities[k - 1];
  }
  return sum;
}

PivotRankDistribution pivot_rank_distribution(std::size_t n, std::size_t c) {
  if (2 * c + 1 > n) throw std::invalid_argument("pivot_rank_distribution: 2c+1 > n");
  PivotRankDistribution d;
  d.n = n;
  d.c = c;
  d.probabilities.resize(n);
  // binom(n, 2c+1) * Pr[pivot = k] = binom(k-1, c) * binom(n-k, c),
  // evaluated in extended precision through lgamma.
  auto lbinom = [](std::size_t a, std::size_t b) -> long double {
    if (b > a) return -1e4000L;  // effectively log(0)
    return std::lgammal(static_cast<long double>(a) + 1) -
           std::lgammal(static_cast<long double>(b) + 1) -
           std::lgammal(static_cast<long double>(a - b) + 1);
  };
  const long double denom = lbinom(n, 2 * c + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k <= c || k > n - c) {
      d.probabilities[k - 1] = 0.0;
      continue;
    }
    long double lp = lbinom(k - 1, c) + lbinom(n - k, c) - denom;
    d.probabilities[k - 1] = static_cast<double>(expl(lp));
  }
  return d;
}

}  // namespace layersort
