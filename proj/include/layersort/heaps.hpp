// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "layersort/meter.hpp"

namespace layersort {

enum class Orientation { Max, Min };

// A contiguous slice viewed as a binary heap with 1-based indices, the
// arena for construction and SpecialLeaf extraction. For Min orientation
// the comparison direction flips; the layout stays the same.
class HeapArea {
 public:
  HeapArea(std::span<Key> storage, Orientation orient, bool leaf_pairs_ordered = false)
      : storage_(storage), orient_(orient), leaf_pairs_(leaf_pairs_ordered) {}

  std::size_t size() const { return storage_.size(); }
  Orientation orientation() const { return orient_; }
  bool leaf_pairs_ordered() const { return leaf_pairs_; }
  void set_leaf_pairs_ordered(bool v) { leaf_pairs_ = v; }

  Key& at(std::size_t i) { return storage_[i - 1]; }
  const Key& at(std::size_t i) const { return storage_[i - 1]; }

  // True when x should be promoted over y (strictly larger for Max,
  // strictly smaller for Min); ties resolve to false.
  bool wins(Key x, Key y, ComparisonMeter& meter) const {
    int c = meter.compare(x, y);
    return orient_ == Orientation::Max ? c > 0 : c < 0;
  }

 private:
  std::span<Key> storage_;
  Orientation orient_;
  bool leaf_pairs_;
};

// Standard Floyd construction; at most 2m comparisons.
void construct_heap_floyd(HeapArea& h, ComparisonMeter& meter);

// Cyclic down-shift from the vacant root: the winning child moves up until
// a leaf is reached; returns the leaf index. With leaf-pair ordering on,
// a final step whose children are both leaves promotes the left child
// without a comparison and moves the right child into the left slot.
std::size_t special_leaf(HeapArea& h, ComparisonMeter& meter);

// Arranges every complete leaf pair so the left sibling wins against the
// right one; at most floor((m+2)/4) comparisons, heap condition preserved.
void order_leaf_pairs(HeapArea& h, ComparisonMeter& meter);

// One extraction: the root moves into work_cell, the hole trickles down via
// special_leaf, and the displaced work element lands (red) at the leaf.
void extract_step(HeapArea& h, Key& work_cell, ComparisonMeter& meter);

// Extracts all m elements. Max heaps fill work back-to-front (descending
// positions), Min heaps front-to-back, per the two-layer extraction loop.
// Throws std::invalid_argument when |work| < m.
void extract_all(HeapArea& h, std::span<Key> work, ComparisonMeter& meter);

// Number of complete leaf pairs of an m-node heap (parents whose two
// children both exist and are leaves).
std::size_t leaf_pair_count(std::size_t m);

// Sift x down from `root` within heap positions [1..size] by first walking
// the special-leaf path, then searching upward from the leaf for x's
// position, then shifting the path segment up by one. Returns the position
// where x landed. `root_vacant` marks whether the root slot must be
// rewritten even when x sinks nowhere (extraction case). When `ca` is
// given, sibling comparisons consult and feed it (see bitheaps.hpp).
class CompareArray;
std::size_t bottom_up_reheap(HeapArea& h, CompareArray* ca, std::size_t root, std::size_t size,
                             Key x, bool root_vacant, ComparisonMeter& meter);

}  // namespace layersort
