// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <vector>

#include "layersort/bitheaps.hpp"
#include "layersort/heaps.hpp"
#include "layersort/meter.hpp"

namespace layersort::testing {

inline bool is_sorted_ascending(const std::vector<Key>& a) {
  return std::is_sorted(a.begin(), a.end());
}

inline bool same_multiset(std::vector<Key> a, std::vector<Key> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Heap condition over the green positions only; `red` mirrors the value
// classes (for distinct keys a red element is one past the pivot).
struct TwoLayerValidator {
  // red(i) -> bool, 1-based
  template <typename RedFn>
  static bool green_heap_ok(const HeapArea& h, RedFn red) {
    for (std::size_t g = 1; g <= h.size(); ++g) {
      if (red(g)) continue;
      for (std::size_t c = 2 * g; c <= std::min(2 * g + 1, h.size()); ++c) {
        if (red(c)) continue;
        bool ok = h.orientation() == Orientation::Max ? h.at(g) >= h.at(c) : h.at(g) <= h.at(c);
        if (!ok) return false;
      }
    }
    return true;
  }
  template <typename RedFn>
  static bool red_closure_ok(const HeapArea& h, RedFn red) {
    for (std::size_t i = 1; i <= h.size(); ++i) {
      if (!red(i)) continue;
      for (std::size_t c = 2 * i; c <= std::min(2 * i + 1, h.size()); ++c)
        if (!red(c)) return false;
    }
    return true;
  }
  // Layering: every green beats every red (max: green >= red).
  template <typename RedFn>
  static bool layering_ok(const HeapArea& h, RedFn red) {
    bool have_g = false, have_r = false;
    Key min_g = 0, max_g = 0, min_r = 0, max_r = 0;
    for (std::size_t i = 1; i <= h.size(); ++i) {
      Key v = h.at(i);
      if (red(i)) {
        if (!have_r || v < min_r) min_r = v;
        if (!have_r || v > max_r) max_r = v;
        have_r = true;
      } else {
        if (!have_g || v < min_g) min_g = v;
        if (!have_g || v > max_g) max_g = v;
        have_g = true;
      }
    }
    if (!have_g || !have_r) return true;
    return h.orientation() == Orientation::Max ? min_g >= max_r : max_g <= min_r;
  }
  // Left sibling not beaten by right one for green complete leaf pairs.
  template <typename RedFn>
  static bool leaf_pairs_ok(const HeapArea& h, RedFn red) {
    const std::size_t m = h.size();
    for (std::size_t j = 1; 2 * j + 1 <= m; ++j) {
      if (4 * j <= m) continue;
      if (red(2 * j) || red(2 * j + 1)) continue;
      bool ok = h.orientation() == Orientation::Max ? h.at(2 * j) >= h.at(2 * j + 1)
                                                    : h.at(2 * j) <= h.at(2 * j + 1);
      if (!ok) return false;
    }
    return true;
  }
};

inline bool plain_heap_ok(const HeapArea& h) {
  return TwoLayerValidator::green_heap_ok(h, [](std::size_t) { return false; });
}

// Recomputes every known CompareArray entry against the current contents.
inline bool compare_array_sound(const HeapArea& h, const CompareArray& ca) {
  const std::size_t m = h.size();
  for (std::size_t i = 1; i <= m / 2; ++i) {
    auto e = ca.get(i);
    if (e == CompareArray::Entry::Unknown) continue;
    if (2 * i + 1 > m) return false;  // entry for a single-child node
    Key l = h.at(2 * i), r = h.at(2 * i + 1);
    bool left_wins_ok = h.orientation() == Orientation::Max ? l >= r : l <= r;
    bool right_wins_ok = h.orientation() == Orientation::Max ? r >= l : r <= l;
    if (e == CompareArray::Entry::Left && !left_wins_ok) return false;
    if (e == CompareArray::Entry::Right && !right_wins_ok) return false;
  }
  return true;
}

}  // namespace layersort::testing
