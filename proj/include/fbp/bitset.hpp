#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fbp {

// Fixed-width bitset whose width is chosen at runtime.
//
// Ordering is lexicographic over the bitstring with position 0 written first
// and '0' < '1'; this is the canonical order used for bicliques.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset from_indices(std::size_t size, std::span<const std::size_t> indices);
  static Bitset from_indices(std::size_t size, std::initializer_list<std::size_t> indices) {
    return from_indices(size, std::span<const std::size_t>(indices.begin(), indices.size()));
  }
  static Bitset full(std::size_t size);
  // Inverse of to_string(); throws FormatError on characters other than 0/1.
  static Bitset from_string(std::string_view bits);
  // Inverse of to_hex(); throws FormatError on bad digits or stray high bits.
  static Bitset from_hex(std::string_view hex, std::size_t size);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  std::size_t count() const;
  // Number of set bits strictly below position i.
  std::size_t count_below(std::size_t i) const;
  bool any() const;
  bool none() const { return !any(); }
  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::string to_string() const;
  // Nibble k holds bits 4k..4k+3, bit 4k being the most significant, so the
  // hex string reads in the same left-to-right order as to_string().
  std::string to_hex() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const Bitset& a, const Bitset& b) = default;
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace fbp
