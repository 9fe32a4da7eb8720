// SPDX-License-Identifier: Apache-2.0
#include "layersort/bitheaps.hpp"

#include <stdexcept>

namespace layersort {

void mdr_construct(HeapArea& h, CompareArray& ca, ComparisonMeter& meter) {
  const std::size_t m = h.size();
  if (m / 2 > ca.capacity()) throw std::length_error("mdr_construct: CompareArray too small");
  for (std::size_t i = m / 2; i >= 1; --i)
    bottom_up_reheap(h, &ca, i, m, h.at(i), /*root_vacant=*/false, meter);
}

namespace {

// height of node j in an m-node heap
std::size_t node_height(std::size_t m, std::size_t j) {
  std::size_t height = 0;
  while (2 * j <= m) {
    j *= 2;
    ++height;
  }
  return height;
}

}  // namespace

std::size_t rg_special_leaf(HeapArea& h, RedGreenArray& rg, CompareArray& ca,
                            ComparisonMeter& meter, RgExtractStats* stats) {
  const std::size_t m = h.size();
  auto write = [&](std::size_t pos, Key v) {
    h.at(pos) = v;
    meter.count_move();
    if (pos > 1) ca.clear(pos / 2);
  };
  std::size_t j = 1;
  for (;;) {
    const std::size_t l = 2 * j, r = l + 1;
    const bool green_l = l <= m && !rg.red(l);
    const bool green_r = r <= m && !rg.red(r);
    if (!green_l && !green_r) {
      // No green child: the descent stops here.
      if (stats != nullptr) stats->stop_savings += node_height(m, j);
      return j;
    }
    std::size_t winner;
    if (green_l && green_r) {
      CompareArray::Entry e = ca.get(j);
      bool right_wins;
      if (e != CompareArray::Entry::Unknown) {
        right_wins = e == CompareArray::Entry::Right;
        if (stats != nullptr) ++stats->compare_array_hits;
      } else {
        right_wins = h.wins(h.at(r), h.at(l), meter);
        ca.set(j, right_wins ? CompareArray::Entry::Right : CompareArray::Entry::Left);
      }
      winner = right_wins ? r : l;
    } else {
      winner = green_l ? l : r;
      // Only a skipped red-vs-green comparison counts as a saving; a single
      // child costs nothing in the plain variant either.
      if (stats != nullptr && r <= m) ++stats->red_green_skips;
    }
    write(j, h.at(winner));
    j = winner;
  }
}

void rg_extract_step(HeapArea& h, RedGreenArray& rg, CompareArray& ca, Key& work_cell,
                     ComparisonMeter& meter, RgExtractStats* stats) {
  Key displaced = work_cell;
  work_cell = h.at(1);
  meter.count_move();
  std::size_t stop = rg_special_leaf(h, rg, ca, meter, stats);
  h.at(stop) = displaced;
  meter.count_move();
  if (stop > 1) ca.clear(stop / 2);
  rg.mark_red(stop);
}

void rg_extract_all(HeapArea& h, RedGreenArray& rg, CompareArray& ca, std::span<Key> work,
                    ComparisonMeter& meter, RgExtractStats* stats) {
  const std::size_t m = h.size();
  if (work.size() < m) throw std::invalid_argument("rg_extract_all: work area smaller than heap");
  if (m > rg.capacity() || m / 2 > ca.capacity())
    throw std::length_error("rg_extract_all: bit arrays too small for this heap");
  for (std::size_t i = 1; i <= m; ++i) {
    Key& cell = h.orientation() == Orientation::Max ? work[work.size() - i] : work[i - 1];
    rg_extract_step(h, rg, ca, cell, meter, stats);
  }
}

}  // namespace layersort
