#ifndef GCFACE_BITVECTOR_HPP
#define GCFACE_BITVECTOR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gcface {

/// Fixed-width bit vector. The width is chosen at construction and never
/// changes; binary operations require equal widths.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t width);

  static BitVector from_mask(std::size_t width, std::uint64_t mask);

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);
  void reset(std::size_t pos) { set(pos, false); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool is_subset_of(const BitVector& other) const;

  /// Indices of set bits in increasing order.
  std::vector<std::size_t> indices() const;

  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& subtract(const BitVector& other);

  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Orders bit vectors as unsigned integers (bit i has weight 2^i).
  /// Vectors of different width order by width first.
  friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs);

  /// Most-significant hex digit first, ceil(width/4) digits.
  std::string to_hex() const;
  static BitVector from_hex(std::size_t width, std::string_view hex);

  std::size_t hash() const noexcept;

private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

} // namespace gcface

#endif
