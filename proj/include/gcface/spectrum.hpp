#ifndef GCFACE_SPECTRUM_HPP
#define GCFACE_SPECTRUM_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gcface/composition.hpp"

namespace gcface {

/// Weakly decreasing top row lambda_1 >= ... >= lambda_n of exact rationals.
class Spectrum {
public:
  /// Throws std::invalid_argument if empty or not weakly decreasing.
  explicit Spectrum(std::vector<mpq_class> values);

  /// Comma-separated rationals: "2,1,0" or "3/2,3/2,0".
  static Spectrum parse(std::string_view text);

  /// A spectrum with block sizes `k` (zeros ignored). Variant 0 uses the
  /// block values s-1, ..., 1, 0; variant 1 uses unevenly spaced fractions.
  static Spectrum with_blocks(const Composition& k, int variant = 0);

  const std::vector<mpq_class>& values() const noexcept { return values_; }
  int n() const noexcept { return static_cast<int>(values_.size()); }
  const mpq_class& operator[](int i) const { return values_.at(static_cast<std::size_t>(i - 1)); } // 1-based

  /// Sizes of the maximal runs of equal values.
  Composition composition() const;

  std::string to_string() const;

private:
  std::vector<mpq_class> values_;
};

} // namespace gcface

#endif
