#ifndef GCFACE_COMPOSITION_HPP
#define GCFACE_COMPOSITION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace gcface {

/// A finite sequence of non-negative integers (k_1, ..., k_s).
///
/// Zero parts are allowed; `reduced()` strips them without reordering, and
/// every diagram-level quantity depends only on the reduced form.
class Composition {
public:
  Composition() = default;
  /// Throws std::invalid_argument on a negative part.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  /// Parses "1,1,1" (whitespace tolerated). An empty string is the empty
  /// composition.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int total() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  bool is_reduced() const noexcept;
  Composition reduced() const;
  Composition reversed() const;

  /// (n_0, n_1, ..., n_s) with n_0 = 0.
  std::vector<int> partial_sums() const;

  /// sum_{i<j} k_i k_j
  long long top_dimension() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

/// All compositions of n into positive parts, in lexicographic order.
std::vector<Composition> compositions_of(int n);

} // namespace gcface

#endif
