#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eulerperc {

/// Fixed-length bit vector. Used for edge configurations (one bit per edge
/// index, 1 = open) and as the row type of GF(2) linear algebra.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Complement of every bit (padding bits stay zero).
  BitVector complemented() const;

  /// True iff every set bit of *this is also set in other.
  bool is_subset_of(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const std::uint64_t> words() const { return words_; }

  /// Hex form: digit k holds bits 4k..4k+3, least significant bit first
  /// within the digit; digits are written in increasing k.
  std::string to_hex() const;
  static BitVector from_hex(std::string_view hex, std::size_t size);

 private:
  void clear_padding();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// One open/closed bit per edge index of a geometry or graph.
using EdgeConfig = BitVector;

}  // namespace eulerperc
