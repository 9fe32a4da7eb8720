// SPDX-License-Identifier: Apache-2.0
#include "layersort/sorters.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "layersort/bitheaps.hpp"
#include "layersort/heaps.hpp"

namespace layersort {

std::string variant_name(SortVariant v) {
  switch (v) {
    case SortVariant::QhsBasic: return "qhs-basic";
    case SortVariant::QhsImproved: return "qhs-improved";
    case SortVariant::QhsBitArray: return "qhs-bitarray";
    case SortVariant::QhsHybrid: return "qhs-hybrid";
    case SortVariant::Quicksort: return "quicksort";
    case SortVariant::BottomUpHeapsort: return "bottom-up-heapsort";
    case SortVariant::MdrHeapsort: return "mdr-heapsort";
    case SortVariant::UltimateHeapsort: return "ultimate-heapsort";
  }
  return "?";
}

std::optional<SortVariant> parse_variant(std::string_view text) {
  if (text == "qhs-basic") return SortVariant::QhsBasic;
  if (text == "qhs-improved") return SortVariant::QhsImproved;
  if (text == "qhs-bitarray") return SortVariant::QhsBitArray;
  if (text == "qhs-hybrid") return SortVariant::QhsHybrid;
  if (text == "quicksort") return SortVariant::Quicksort;
  if (text == "bottom-up-heapsort") return SortVariant::BottomUpHeapsort;
  if (text == "mdr-heapsort") return SortVariant::MdrHeapsort;
  if (text == "ultimate-heapsort") return SortVariant::UltimateHeapsort;
  return std::nullopt;
}

bool variant_uses_strategy(SortVariant v) {
  switch (v) {
    case SortVariant::BottomUpHeapsort:
    case SortVariant::MdrHeapsort:
    case SortVariant::UltimateHeapsort: return false;
    default: return true;
  }
}

std::size_t ReplayPivotChooser::choose(std::span<Key> window, ComparisonMeter&) {
  if (next_ >= values_.size()) throw std::logic_error("pivot replay exhausted");
  Key v = values_[next_++];
  auto it = std::find(window.begin(), window.end(), v);
  if (it == window.end()) throw std::logic_error("replayed pivot value not in window");
  return static_cast<std::size_t>(it - window.begin());
}

namespace {

// Exact median select that leaves the window reverse-partitioned around the
// returned 1-based position. Sample-median quickselect rounds, with a
// deterministic median-of-medians tail once the round budget runs out.
std::size_t select_median_partitioned(std::span<Key> a, SeededRng& rng, ComparisonMeter& meter) {
  const std::size_t n = a.size();
  std::size_t lo = 0, hi = n;
  std::size_t d = (n + 1) / 2;  // descending rank of the median
  int budget = 2 * static_cast<int>(std::bit_width(n)) + 8;
  const PivotStrategy sqrt_samples = PivotStrategy::scheduled(Schedule::Sqrt);
  for (;;) {
    const std::size_t len = hi - lo;
    if (len == 1) return lo + 1;
    auto w = a.subspan(lo, len);
    if (budget-- <= 0) {
      std::size_t idx = mom_select_index(w, len - d + 1, meter);
      return lo + idx + 1;
    }
    std::size_t pidx = choose_pivot(w, sqrt_samples, rng, meter);
    std::size_t k = partition_reverse(w, pidx, meter);
    if (d == k) return lo + k;
    if (d < k) {
      hi = lo + k - 1;
    } else {
      lo += k;
      d -= k;
    }
  }
}

class QhsEngine {
 public:
  QhsEngine(std::span<Key> a, QhsFlavor flavor, PivotChooser* chooser, SeededRng* rng,
            ComparisonMeter& meter, SortStats* stats, bool hybrid, bool ultimate)
      : a_(a),
        flavor_(flavor),
        chooser_(chooser),
        rng_(rng),
        meter_(meter),
        stats_(stats),
        hybrid_(hybrid),
        ultimate_(ultimate) {
    if (flavor_ == QhsFlavor::BitArrays) {
      ca_.emplace((a.size() + 3) / 4);
      rg_.emplace((a.size() + 1) / 2);
    }
  }

  void run() {
    std::size_t lo = 0, hi = a_.size();
    while (hi - lo > 1) {
      const std::size_t nu = hi - lo;
      auto window = a_.subspan(lo, nu);
      std::size_t k;
      if (ultimate_) {
        PhaseScope scope(meter_, Phase::Pivot);
        k = select_median_partitioned(window, *rng_, meter_);
      } else {
        std::size_t pidx = chooser_->choose(window, meter_);
        meter_.set_phase(Phase::Partition);
        k = partition_reverse(window, pidx, meter_);
        if (hybrid_ && (k < (nu + 3) / 4 || k > 3 * nu / 4)) ultimate_ = true;
      }
      if (2 * k <= nu) {
        const std::size_t m = k - 1;
        if (m >= 1) run_heap(a_.subspan(lo, m), Orientation::Max, a_.subspan(hi - m, m));
        swap_final(lo + k - 1, hi - k);
        hi -= k;
      } else {
        const std::size_t m = nu - k;
        if (m >= 1) run_heap(a_.subspan(lo + k, m), Orientation::Min, a_.subspan(lo, m));
        swap_final(lo + k - 1, hi - k);
        lo = hi - k + 1;
      }
    }
  }

 private:
  void swap_final(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    meter_.count_move();
    meter_.count_move();
  }

  void run_heap(std::span<Key> storage, Orientation orient, std::span<Key> work) {
    HeapArea h(storage, orient);
    const std::uint64_t con0 = meter_.comparisons(Phase::Construction);
    std::uint64_t ord = 0;
    meter_.set_phase(Phase::Construction);
    if (flavor_ == QhsFlavor::BitArrays) {
      ca_->zero_first(h.size() / 2);
      rg_->zero_first(h.size());
      mdr_construct(h, *ca_, meter_);
    } else {
      construct_heap_floyd(h, meter_);
      if (flavor_ == QhsFlavor::Improved) {
        const std::uint64_t before = meter_.comparisons(Phase::Construction);
        order_leaf_pairs(h, meter_);
        ord = meter_.comparisons(Phase::Construction) - before;
      }
    }
    const std::uint64_t con = meter_.comparisons(Phase::Construction) - con0 - ord;
    const std::uint64_t ext0 = meter_.comparisons(Phase::Extraction);
    meter_.set_phase(Phase::Extraction);
    if (flavor_ == QhsFlavor::BitArrays) {
      rg_extract_all(h, *rg_, *ca_, work, meter_);
    } else {
      extract_all(h, work, meter_);
    }
    if (stats_ != nullptr) ++stats_->heaps;
    if (meter_.heap_trace != nullptr) {
      meter_.heap_trace->push_back(
          {h.size(), con, ord, meter_.comparisons(Phase::Extraction) - ext0});
    }
  }

  std::span<Key> a_;
  QhsFlavor flavor_;
  PivotChooser* chooser_;
  SeededRng* rng_;
  ComparisonMeter& meter_;
  SortStats* stats_;
  bool hybrid_;
  bool ultimate_;
  std::optional<CompareArray> ca_;
  std::optional<RedGreenArray> rg_;
};

void insertion_sort_counted(std::span<Key> a, ComparisonMeter& meter) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    Key v = a[i];
    std::size_t j = i;
    while (j > 0 && meter.greater(a[j - 1], v)) {
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

// Ascending quickselect: leaves a[0..idx) <= a[idx] <= a(idx..n); the
// sample-median step of the quicksort rounds, so the whole sample ends up
// classified relative to the pivot.
std::size_t quickselect_forward_index(std::span<Key> a, std::size_t rank,
                                      const PivotStrategy& strategy, SeededRng& rng,
                                      ComparisonMeter& meter) {
  std::size_t lo = 0, hi = a.size();
  std::size_t r = rank;
  for (;;) {
    const std::size_t len = hi - lo;
    if (len == 1) return lo;
    auto window = a.subspan(lo, len);
    std::size_t pidx = choose_pivot(window, strategy, rng, meter);
    std::size_t k = partition_forward(window, pidx, meter);
    if (r == k) return lo + k - 1;
    if (r < k) {
      hi = lo + k - 1;
    } else {
      lo += k;
      r -= k;
    }
  }
}

// One quicksort round in the classic sampled style: the sample moves to the
// front, its median is selected in place (tiny samples are insertion
// sorted), and the partition scan covers only the n - s non-sample elements
// since the selection already classified the sample. Returns the 1-based
// pivot position, or 0 when the round sorted the whole window. `nested`
// marks sample work, which keeps the caller's phase instead of switching.
std::size_t quicksort_round(std::span<Key> a, const PivotStrategy& strategy, SeededRng& rng,
                            ComparisonMeter& meter, bool nested) {
  const std::size_t n = a.size();
  if (strategy.kind == PivotStrategy::Kind::ExactMedianOfMedians) {
    std::size_t pidx;
    {
      PhaseScope scope(meter, Phase::Pivot);
      pidx = median_of_medians(a, meter);
    }
    if (!nested) meter.set_phase(Phase::Partition);
    return partition_forward(a, pidx, meter);
  }
  const std::size_t s = strategy.sample_size(n);
  if (s == 1) {
    std::size_t pidx = rng.below(n);
    if (!nested) meter.set_phase(Phase::Partition);
    return partition_forward(a, pidx, meter);
  }
  if (s >= n) {  // tiny window: the sample is the window
    PhaseScope scope(meter, Phase::Pivot);
    insertion_sort_counted(a, meter);
    return 0;
  }
  {
    PhaseScope scope(meter, Phase::Pivot);
    for (std::size_t i = 0; i < s; ++i) {
      std::size_t j = i + rng.below(n - i);
      if (i != j) {
        std::swap(a[i], a[j]);
        meter.count_move();
        meter.count_move();
      }
    }
    auto prefix = a.first(s);
    if (s <= 5) {
      insertion_sort_counted(prefix, meter);
    } else {
      quickselect_forward_index(prefix, (s + 1) / 2,
                                PivotStrategy::scheduled(Schedule::Sqrt), rng, meter);
    }
  }
  if (!nested) meter.set_phase(Phase::Partition);
  const std::size_t med = (s - 1) / 2;
  const Key pivot = a[med];
  std::swap(a[med], a[n - 1]);  // park the pivot; an unscanned element lands at med
  meter.count_move();
  meter.count_move();
  std::size_t store = med;
  if (meter.less_equal(a[med], pivot)) ++store;  // the swapped-in element
  // positions (med, s) hold sample elements >= pivot: already classified
  for (std::size_t i = s; i + 1 < n; ++i) {
    if (meter.less_equal(a[i], pivot)) {
      if (i != store) {
        std::swap(a[i], a[store]);
        meter.count_move();
        meter.count_move();
      }
      ++store;
    }
  }
  if (store != n - 1) {
    std::swap(a[store], a[n - 1]);
    meter.count_move();
    meter.count_move();
  }
  return store + 1;
}

// Recursion on the smaller side first, iteration on the larger.
void quicksort_range(std::span<Key> a, std::size_t lo, std::size_t hi,
                     const PivotStrategy& strategy, SeededRng& rng, ComparisonMeter& meter,
                     bool nested) {
  while (hi - lo > 1) {
    auto window = a.subspan(lo, hi - lo);
    std::size_t k = quicksort_round(window, strategy, rng, meter, nested);
    if (k == 0) return;  // the round sorted the window outright
    const std::size_t left_lo = lo, left_hi = lo + k - 1;
    const std::size_t right_lo = lo + k, right_hi = hi;
    if (left_hi - left_lo <= right_hi - right_lo) {
      quicksort_range(a, left_lo, left_hi, strategy, rng, meter, nested);
      lo = right_lo;
      hi = right_hi;
    } else {
      quicksort_range(a, right_lo, right_hi, strategy, rng, meter, nested);
      lo = left_lo;
      hi = left_hi;
    }
  }
}

}  // namespace

void quickheapsort(std::span<Key> a, QhsFlavor flavor, PivotChooser& chooser,
                   ComparisonMeter& meter, SortStats* stats) {
  QhsEngine(a, flavor, &chooser, nullptr, meter, stats, false, false).run();
}

void quickheapsort_hybrid(std::span<Key> a, PivotChooser& chooser, SeededRng& rng,
                          ComparisonMeter& meter, SortStats* stats) {
  QhsEngine(a, QhsFlavor::Improved, &chooser, &rng, meter, stats, true, false).run();
}

void ultimate_heapsort(std::span<Key> a, SeededRng& rng, ComparisonMeter& meter,
                       SortStats* stats) {
  QhsEngine(a, QhsFlavor::Improved, nullptr, &rng, meter, stats, false, true).run();
}

void quicksort(std::span<Key> a, const PivotStrategy& strategy, SeededRng& rng,
               ComparisonMeter& meter) {
  quicksort_range(a, 0, a.size(), strategy, rng, meter, /*nested=*/false);
}

void bottom_up_heapsort(std::span<Key> a, ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  HeapArea h(a, Orientation::Max);
  meter.set_phase(Phase::Construction);
  // Wegener-style construction: the same leaf-search-then-climb reheap that
  // the sorting phase uses, just without the memo array.
  for (std::size_t i = n / 2; i >= 1; --i)
    bottom_up_reheap(h, nullptr, i, n, h.at(i), /*root_vacant=*/false, meter);
  meter.set_phase(Phase::Extraction);
  for (std::size_t end = n; end >= 2; --end) {
    Key x = h.at(end);
    h.at(end) = h.at(1);
    meter.count_move();
    bottom_up_reheap(h, nullptr, 1, end - 1, x, /*root_vacant=*/true, meter);
  }
}

void mdr_heapsort(std::span<Key> a, ComparisonMeter& meter) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  CompareArray ca(n / 2);
  HeapArea h(a, Orientation::Max);
  meter.set_phase(Phase::Construction);
  mdr_construct(h, ca, meter);
  meter.set_phase(Phase::Extraction);
  for (std::size_t end = n; end >= 2; --end) {
    Key x = h.at(end);
    h.at(end) = h.at(1);
    meter.count_move();
    ca.clear(end / 2);  // position `end` leaves the heap
    bottom_up_reheap(h, &ca, 1, end - 1, x, /*root_vacant=*/true, meter);
  }
}

RunRecord sort(std::span<Key> a, SortVariant variant, const PivotStrategy& strategy,
               std::uint64_t seed, Comparator comparator, bool timed) {
  ComparisonMeter meter(comparator);
  SeededRng rng(seed);
  StrategyPivotChooser chooser(strategy, rng);
  SortStats stats;
  auto started = std::chrono::steady_clock::now();
  switch (variant) {
    case SortVariant::QhsBasic: quickheapsort(a, QhsFlavor::Basic, chooser, meter, &stats); break;
    case SortVariant::QhsImproved:
      quickheapsort(a, QhsFlavor::Improved, chooser, meter, &stats);
      break;
    case SortVariant::QhsBitArray:
      quickheapsort(a, QhsFlavor::BitArrays, chooser, meter, &stats);
      break;
    case SortVariant::QhsHybrid: quickheapsort_hybrid(a, chooser, rng, meter, &stats); break;
    case SortVariant::Quicksort: quicksort(a, strategy, rng, meter); break;
    case SortVariant::BottomUpHeapsort: bottom_up_heapsort(a, meter); break;
    case SortVariant::MdrHeapsort: mdr_heapsort(a, meter); break;
    case SortVariant::UltimateHeapsort: ultimate_heapsort(a, rng, meter, &stats); break;
  }
  auto stopped = std::chrono::steady_clock::now();
  RunRecord r = RunRecord::from_meter(meter);
  r.n = a.size();
  r.variant = variant_name(variant);
  r.strategy = variant_uses_strategy(variant) ? strategy.name() : "-";
  r.seed = seed;
  r.heaps = stats.heaps;
  if (timed) r.wall_seconds = std::chrono::duration<double>(stopped - started).count();
  return r;
}

}  // namespace layersort
