// SPDX-License-Identifier: Apache-2.0
#include "layersort/meter.hpp"

#include <cmath>

namespace layersort {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Pivot: return "pivot";
    case Phase::Partition: return "partition";
    case Phase::Construction: return "construction";
    case Phase::Extraction: return "extraction";
  }
  return "?";
}

double log4_map(Key x) {
  // Defined for x >= 0: x + 2^16 >= 2^16, so the chain stays positive.
  double v = static_cast<double>(x) + 65536.0;
  v = std::log2(v);
  v = std::log2(v);
  v = std::log2(v);
  return std::log2(v);
}

std::vector<Key> random_permutation(SeededRng& rng, std::size_t n) {
  std::vector<Key> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<Key>(i + 1);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(a[i - 1], a[j]);
  }
  return a;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over the running hash
  std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RunRecord RunRecord::from_meter(const ComparisonMeter& meter) {
  RunRecord r;
  r.pivot = meter.comparisons(Phase::Pivot);
  r.partition = meter.comparisons(Phase::Partition);
  r.construction = meter.comparisons(Phase::Construction);
  r.extraction = meter.comparisons(Phase::Extraction);
  r.total = r.pivot + r.partition + r.construction + r.extraction;
  r.moves = meter.total_moves();
  return r;
}

}  // namespace layersort
