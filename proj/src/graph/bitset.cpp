#include "fbp/bitset.hpp"

#include "fbp/errors.hpp"

namespace fbp {

Bitset Bitset::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  Bitset b(size);
  for (std::size_t i : indices) {
    if (i >= size) throw ContractViolation("bit index out of range");
    b.set(i);
  }
  return b;
}

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~std::uint64_t{0};
  if (size % 64 != 0 && !b.words_.empty()) b.words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  return b;
}

Bitset Bitset::from_string(std::string_view bits) {
  Bitset b(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      b.set(i);
    } else if (bits[i] != '0') {
      throw FormatError("bitstring contains a character other than 0/1");
    }
  }
  return b;
}

Bitset Bitset::from_hex(std::string_view hex, std::size_t size) {
  if (hex.size() != (size + 3) / 4) throw FormatError("hex bitstring has the wrong length");
  Bitset b(size);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char c = hex[k];
    unsigned nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw FormatError("invalid hex digit in bitstring");
    }
    for (std::size_t t = 0; t < 4; ++t) {
      if ((nibble >> (3 - t)) & 1U) {
        const std::size_t i = 4 * k + t;
        if (i >= size) throw FormatError("hex bitstring sets bits beyond its width");
        b.set(i);
      }
    }
  }
  return b;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bitset::count_below(std::size_t i) const {
  std::size_t c = 0;
  const std::size_t full_words = i >> 6;
  for (std::size_t w = 0; w < full_words; ++w) c += static_cast<std::size_t>(std::popcount(words_[w]));
  if ((i & 63) != 0) {
    c += static_cast<std::size_t>(std::popcount(words_[full_words] & ((std::uint64_t{1} << (i & 63)) - 1)));
  }
  return c;
}

bool Bitset::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Bitset::to_string() const {
  std::string s(size_, '0');
  for_each([&](std::size_t i) { s[i] = '1'; });
  return s;
}

std::string Bitset::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s((size_ + 3) / 4, '0');
  for (std::size_t k = 0; k < s.size(); ++k) {
    unsigned nibble = 0;
    for (std::size_t t = 0; t < 4; ++t) {
      const std::size_t i = 4 * k + t;
      nibble = (nibble << 1) | ((i < size_ && test(i)) ? 1U : 0U);
    }
    s[k] = kDigits[nibble];
  }
  return s;
}

std::size_t Bitset::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ size_;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace fbp
