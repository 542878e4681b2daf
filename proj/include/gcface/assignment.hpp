#ifndef GCFACE_ASSIGNMENT_HPP
#define GCFACE_ASSIGNMENT_HPP

#include <compare>
#include <string>
#include <vector>

namespace gcface {

/// Local shape of a face at an interior terminal vertex: which of its two
/// incoming edges are present. RIGHT = (1,0), UP = (0,1), BOTH = (1,1).
enum class Arrow : unsigned char { right, up, both };

char arrow_letter(Arrow a) noexcept;

/// A word of length s-1 over {RIGHT, UP, BOTH}, one letter per interior
/// terminal v_1, ..., v_{s-1}.
class AssignmentWord {
public:
  AssignmentWord() = default;
  explicit AssignmentWord(std::vector<Arrow> entries) : entries_(std::move(entries)) {}

  /// Parses letters R/U/B, e.g. "RB".
  static AssignmentWord parse(const std::string& letters);

  /// All 3^length words in lexicographic order with RIGHT < UP < BOTH.
  static std::vector<AssignmentWord> all(std::size_t length);

  std::size_t length() const noexcept { return entries_.size(); }
  const std::vector<Arrow>& entries() const noexcept { return entries_; }
  /// 1-based, i in [1, length].
  Arrow at(std::size_t i) const { return entries_.at(i - 1); }

  /// alpha_i for i in [1, length + 1]; alpha_s = 1.
  int alpha(std::size_t i) const;
  /// beta_i for i in [0, length]; beta_0 = 1.
  int beta(std::size_t i) const;

  /// Number of BOTH entries.
  int weight() const noexcept;
  /// 0/1 vector marking BOTH positions.
  std::vector<int> indicator() const;

  std::string to_string() const;

  friend bool operator==(const AssignmentWord&, const AssignmentWord&) = default;
  friend auto operator<=>(const AssignmentWord&, const AssignmentWord&) = default;

private:
  std::vector<Arrow> entries_;
};

} // namespace gcface

#endif
