#include "gcface/bitvector.hpp"

#include <bit>
#include <stdexcept>

namespace gcface {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

void require_same_width(const BitVector& a, const BitVector& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("bit vectors of different width");
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

} // namespace

BitVector::BitVector(std::size_t width) : width_(width), words_(words_for(width), 0) {}

BitVector BitVector::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > kWordBits) {
    throw std::invalid_argument("from_mask supports at most 64 bits");
  }
  BitVector v(width);
  if (width == 0) return v;
  if (width < kWordBits) mask &= (std::uint64_t{1} << width) - 1;
  v.words_[0] = mask;
  return v;
}

bool BitVector::test(std::size_t pos) const {
  if (pos >= width_) throw std::out_of_range("bit index out of range");
  return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
}

void BitVector::set(std::size_t pos, bool value) {
  if (pos >= width_) throw std::out_of_range("bit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (pos % kWordBits);
  if (value) {
    words_[pos / kWordBits] |= bit;
  } else {
    words_[pos / kWordBits] &= ~bit;
  }
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::subtract(const BitVector& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
  if (auto c = lhs.width_ <=> rhs.width_; c != 0) return c;
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (width_ + 3) / 4;
  std::string out(digits == 0 ? 1 : digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t pos = d * 4 + b;
      if (pos < width_ && test(pos)) nibble |= 1U << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

BitVector BitVector::from_hex(std::size_t width, std::string_view hex) {
  const std::size_t digits = (width + 3) / 4;
  if (hex.size() != (digits == 0 ? 1 : digits)) {
    throw std::invalid_argument("hex string has wrong length for bit width");
  }
  BitVector v(width);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int value = hex_value(hex[hex.size() - 1 - d]);
    if (value < 0) throw std::invalid_argument("invalid hex digit");
    for (std::size_t b = 0; b < 4; ++b) {
      if (((value >> b) & 1) == 0) continue;
      const std::size_t pos = d * 4 + b;
      if (pos >= width) throw std::invalid_argument("hex string sets bits beyond width");
      v.set(pos);
    }
  }
  return v;
}

std::size_t BitVector::hash() const noexcept {
  std::size_t h = width_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace gcface
