// SPDX-License-Identifier: Apache-2.0
#include "layersort/heaps.hpp"

#include <stdexcept>

#include "layersort/bitheaps.hpp"

namespace layersort {

void construct_heap_floyd(HeapArea& h, ComparisonMeter& meter) {
  const std::size_t m = h.size();
  for (std::size_t i = m / 2; i >= 1; --i) {
    Key v = h.at(i);
    std::size_t j = i;
    while (2 * j <= m) {
      std::size_t c = 2 * j;
      if (c + 1 <= m && h.wins(h.at(c + 1), h.at(c), meter)) c = c + 1;
      if (!h.wins(h.at(c), v, meter)) break;
      h.at(j) = h.at(c);
      meter.count_move();
      j = c;
    }
    if (j != i) {
      h.at(j) = v;
      meter.count_move();
    }
  }
}

std::size_t special_leaf(HeapArea& h, ComparisonMeter& meter) {
  const std::size_t m = h.size();
  std::size_t i = 1;
  while (2 * i <= m) {
    const std::size_t l = 2 * i, r = l + 1;
    if (r > m) {  // single left child: promote without a comparison
      h.at(i) = h.at(l);
      meter.count_move();
      i = l;
    } else if (h.leaf_pairs_ordered() && 2 * l > m) {
      // Both children are leaves and the pair is ordered: move up the left
      // child, put the right one at the place of the former left one.
      h.at(i) = h.at(l);
      h.at(l) = h.at(r);
      meter.count_move();
      meter.count_move();
      i = r;
    } else if (h.wins(h.at(r), h.at(l), meter)) {
      h.at(i) = h.at(r);
      meter.count_move();
      i = r;
    } else {
      h.at(i) = h.at(l);
      meter.count_move();
      i = l;
    }
  }
  return i;
}

std::size_t leaf_pair_count(std::size_t m) {
  if (m < 3) return 0;
  std::size_t count = 0;
  for (std::size_t j = m / 4 + 1; 2 * j + 1 <= m; ++j)
    if (4 * j > m) ++count;
  return count;
}

void order_leaf_pairs(HeapArea& h, ComparisonMeter& meter) {
  const std::size_t m = h.size();
  for (std::size_t j = m / 4 + 1; 2 * j + 1 <= m; ++j) {
    if (4 * j <= m) continue;  // left child is internal; not a leaf pair
    const std::size_t l = 2 * j, r = l + 1;
    if (h.wins(h.at(r), h.at(l), meter)) {
      std::swap(h.at(l), h.at(r));
      meter.count_move();
      meter.count_move();
    }
  }
  h.set_leaf_pairs_ordered(true);
}

void extract_step(HeapArea& h, Key& work_cell, ComparisonMeter& meter) {
  Key displaced = work_cell;
  work_cell = h.at(1);
  meter.count_move();
  std::size_t leaf = special_leaf(h, meter);
  h.at(leaf) = displaced;
  meter.count_move();
}

void extract_all(HeapArea& h, std::span<Key> work, ComparisonMeter& meter) {
  const std::size_t m = h.size();
  if (work.size() < m) throw std::invalid_argument("extract_all: work area smaller than heap");
  for (std::size_t i = 1; i <= m; ++i) {
    Key& cell = h.orientation() == Orientation::Max ? work[work.size() - i] : work[i - 1];
    extract_step(h, cell, meter);
  }
}

std::size_t bottom_up_reheap(HeapArea& h, CompareArray* ca, std::size_t root, std::size_t size,
                             Key x, bool root_vacant, ComparisonMeter& meter) {
  // Phase 1: special-leaf path, elements left in place.
  std::size_t path[64];
  int depth = 0;
  std::size_t j = root;
  while (2 * j <= size) {
    const std::size_t l = 2 * j, r = l + 1;
    if (r > size) {
      j = l;
    } else {
      bool right_wins;
      if (ca != nullptr && ca->get(j) != CompareArray::Entry::Unknown) {
        right_wins = ca->get(j) == CompareArray::Entry::Right;
      } else {
        right_wins = h.wins(h.at(r), h.at(l), meter);
        if (ca != nullptr)
          ca->set(j, right_wins ? CompareArray::Entry::Right : CompareArray::Entry::Left);
      }
      j = right_wins ? r : l;
    }
    path[depth++] = j;
  }
  // Phase 2: climb from the special leaf towards the root.
  int s = depth;
  while (s >= 1 && h.wins(x, h.at(path[s - 1]), meter)) --s;
  // Phase 3: shift path[0..s) up one position, x lands at path[s-1]
  // (or stays at/returns to the root when s == 0).
  auto write = [&](std::size_t pos, Key v) {
    h.at(pos) = v;
    meter.count_move();
    if (ca != nullptr && pos > 1) ca->clear(pos / 2);
  };
  if (s == 0) {
    if (root_vacant) write(root, x);
    return root;
  }
  write(root, h.at(path[0]));
  for (int u = 1; u < s; ++u) write(path[u - 1], h.at(path[u]));
  write(path[s - 1], x);
  return path[s - 1];
}

}  // namespace layersort
