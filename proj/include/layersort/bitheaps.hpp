// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "layersort/heaps.hpp"
#include "layersort/meter.hpp"

namespace layersort {

// Ternary memo of the last sibling comparison per inner node: two bits per
// entry (left / right / unknown), packed 32 entries to a word. An entry is
// sound only while both children still hold the compared contents; every
// write into heap position j therefore resets entry parent(j).
class CompareArray {
 public:
  enum class Entry : unsigned { Unknown = 0, Left = 1, Right = 2 };

  explicit CompareArray(std::size_t capacity_entries)
      : capacity_(capacity_entries), words_((capacity_entries + 31) / 32, 0) {}

  std::size_t capacity() const { return capacity_; }

  Entry get(std::size_t i) const {
    std::size_t b = (i - 1) * 2;
    return static_cast<Entry>((words_[b >> 6] >> (b & 63)) & 3u);
  }
  void set(std::size_t i, Entry e) {
    std::size_t b = (i - 1) * 2;
    std::uint64_t& w = words_[b >> 6];
    w = (w & ~(std::uint64_t{3} << (b & 63))) |
        (static_cast<std::uint64_t>(e) << (b & 63));
  }
  void clear(std::size_t i) {
    if (i >= 1 && i <= capacity_) set(i, Entry::Unknown);
  }
  // Per-heap reset of entries 1..count; touches O(count) words.
  void zero_first(std::size_t count) {
    std::size_t w = (count * 2 + 63) / 64;
    for (std::size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
  }
  std::size_t known_count(std::size_t limit) const {
    std::size_t k = 0;
    for (std::size_t i = 1; i <= limit && i <= capacity_; ++i)
      if (get(i) != Entry::Unknown) ++k;
    return k;
  }

 private:
  std::size_t capacity_;
  std::vector<std::uint64_t> words_;
};

// One color bit per heap position: red elements are blocked (known on the
// pivot side), green ones are extractable.
class RedGreenArray {
 public:
  explicit RedGreenArray(std::size_t capacity_bits)
      : capacity_(capacity_bits), words_((capacity_bits + 63) / 64, 0) {}

  std::size_t capacity() const { return capacity_; }
  bool red(std::size_t i) const {
    std::size_t b = i - 1;
    return (words_[b >> 6] >> (b & 63)) & 1u;
  }
  void mark_red(std::size_t i) {
    std::size_t b = i - 1;
    words_[b >> 6] |= std::uint64_t{1} << (b & 63);
  }
  void zero_first(std::size_t count) {
    std::size_t w = (count + 63) / 64;
    for (std::size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
  }
  std::size_t red_count(std::size_t limit) const {
    std::size_t k = 0;
    for (std::size_t i = 1; i <= limit && i <= capacity_; ++i)
      if (red(i)) ++k;
    return k;
  }

 private:
  std::size_t capacity_;
  std::vector<std::uint64_t> words_;
};

// McDiarmid-Reed heap construction: positions are traversed backward and
// reheaped by walking the special-leaf path (reusing stored bits, recording
// new ones), searching upward for the root's slot, and shifting the path up
// one. Bits below the insertion point survive; bits on the shifted segment
// are reset by the write rule. ca must cover floor(m/2) entries and be
// all-unknown for this heap.
void mdr_construct(HeapArea& h, CompareArray& ca, ComparisonMeter& meter);

struct RgExtractStats {
  std::uint64_t stop_savings = 0;     // sum of heights of early-stop nodes
  std::uint64_t red_green_skips = 0;  // promotions over a red sibling, no comparison
  std::uint64_t compare_array_hits = 0;
  bool operator==(const RgExtractStats&) const = default;
};

// One red-green extraction step: the descent consults ca before comparing,
// resolves green-vs-red to the green child for free, and stops at the first
// node without a green child, where the incoming element lands and turns red.
std::size_t rg_special_leaf(HeapArea& h, RedGreenArray& rg, CompareArray& ca,
                            ComparisonMeter& meter, RgExtractStats* stats = nullptr);
void rg_extract_step(HeapArea& h, RedGreenArray& rg, CompareArray& ca, Key& work_cell,
                     ComparisonMeter& meter, RgExtractStats* stats = nullptr);

// Full extraction with the bit arrays; work filling direction as in
// extract_all. Throws std::length_error when the bit arrays cannot cover
// the heap (a sizing bug) and std::invalid_argument when |work| < m.
void rg_extract_all(HeapArea& h, RedGreenArray& rg, CompareArray& ca, std::span<Key> work,
                    ComparisonMeter& meter, RgExtractStats* stats = nullptr);

}  // namespace layersort
