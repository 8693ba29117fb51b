#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hypertree {

/// Fixed-width bit set used for vertex sets and edge-index sets.
/// Widths up to 64 bits are stored inline; wider sets go to the heap.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits) {
    if (word_count() > 1) heap_.assign(word_count(), 0);
  }

  int size() const { return bits_; }

  void set(int i) { words()[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words()[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words()[i >> 6] >> (i & 63)) & 1; }

  void reset_all() {
    inline_ = 0;
    for (auto& w : heap_) w = 0;
  }

  bool any() const {
    for (int i = 0; i < word_count(); ++i)
      if (words()[i]) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (int i = 0; i < word_count(); ++i) c += std::popcount(words()[i]);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (int i = 0; i < word_count(); ++i) words()[i] &= o.words()[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (int i = 0; i < word_count(); ++i) words()[i] |= o.words()[i];
    return *this;
  }
  /// Clears every bit that is set in `o`.
  Bitset& and_not(const Bitset& o) {
    for (int i = 0; i < word_count(); ++i) words()[i] &= ~o.words()[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  bool is_subset_of(const Bitset& o) const {
    for (int i = 0; i < word_count(); ++i)
      if (words()[i] & ~o.words()[i]) return false;
    return true;
  }

  static int intersection_count(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (int i = 0; i < a.word_count(); ++i)
      c += std::popcount(a.words()[i] & b.words()[i]);
    return c;
  }

  /// Index of the lowest set bit, or -1 when empty.
  int find_first() const {
    for (int i = 0; i < word_count(); ++i)
      if (words()[i]) return i * 64 + std::countr_zero(words()[i]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < word_count(); ++i) {
      std::uint64_t w = words()[i];
      while (w) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  int word_count() const { return (bits_ + 63) >> 6; }
  std::uint64_t* words() { return heap_.empty() ? &inline_ : heap_.data(); }
  const std::uint64_t* words() const {
    return heap_.empty() ? &inline_ : heap_.data();
  }

  int bits_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace hypertree
