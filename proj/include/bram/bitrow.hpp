#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bram {

/// Fixed-width bit vector used for adjacency rows. Hosts here stay in the
/// low thousands per side, so dense rows with 64-bit words beat sparse lists
/// for the popcount-heavy searches.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  static int and_count(const BitRow& a, const BitRow& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }

  BitRow& operator&=(const BitRow& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  /// Index of the first set bit, or -1.
  int find_first() const { return find_next(-1); }

  /// Index of the first set bit strictly after prev, or -1.
  int find_next(int prev) const {
    int i = prev + 1;
    if (i >= nbits_) return -1;
    std::size_t word = std::size_t(i) >> 6;
    std::uint64_t x = w_[word] >> (i & 63);
    if (x) return i + std::countr_zero(x);
    for (++word; word < w_.size(); ++word)
      if (w_[word]) return int(word * 64) + std::countr_zero(w_[word]);
    return -1;
  }

  bool operator==(const BitRow&) const = default;

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace bram
