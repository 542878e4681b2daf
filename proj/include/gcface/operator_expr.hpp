#ifndef GCFACE_OPERATOR_EXPR_HPP
#define GCFACE_OPERATOR_EXPR_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gcface/assignment.hpp"
#include "gcface/truncated_series.hpp"

namespace gcface {

/// Expanded form of a constant-coefficient operator: a sum of
/// c * t^p * prod_i (d/dx_i)^{m_i}, keyed by (m, p).
using OperatorNormalForm = std::map<std::pair<Exponent, int>, mpq_class>;

/// Symbolic differential operator over generators d/dx_i, multiplication by
/// t, and rational scalars, closed under sum and composition. All
/// generators commute.
class OperatorExpr {
public:
  enum class Kind { scalar, derivative, times_t, sum, product };

  static OperatorExpr identity() { return scalar(1); }
  static OperatorExpr scalar(const mpq_class& c);
  static OperatorExpr d(std::size_t var);
  static OperatorExpr times_t();

  friend OperatorExpr operator+(const OperatorExpr& lhs, const OperatorExpr& rhs);
  friend OperatorExpr operator-(const OperatorExpr& lhs, const OperatorExpr& rhs);
  /// Composition.
  friend OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs);

  static OperatorExpr sum(const std::vector<OperatorExpr>& terms);
  static OperatorExpr product(const std::vector<OperatorExpr>& factors);

  Kind kind() const noexcept;

  /// Highest derivative order over all expanded terms (an upper bound for
  /// sums that cancel).
  int order() const;

  /// Applies the operator. Throws std::domain_error when the order exceeds
  /// the series' validity degree.
  TruncatedSeries apply(const TruncatedSeries& series) const;

  OperatorNormalForm expand(std::size_t num_vars) const;

  std::string to_string() const;

private:
  struct Node;
  explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  TruncatedSeries apply_unchecked(const TruncatedSeries& series) const;

  std::shared_ptr<const Node> node_;
};

/// Variable index of x_i (1-based) and y_i in the interleaved layout
/// (x_1, y_1, ..., x_{s-1}, y_{s-1}, x_s).
inline std::size_t x_var(std::size_t i) { return 2 * (i - 1); }
inline std::size_t y_var(std::size_t i) { return 2 * i - 1; }

/// d^s / dx_1 ... dx_s over interleaved variables.
OperatorExpr mixed_x_derivative(std::size_t s);

/// prod_{i<s} (d/dx_i + d/dx_{i+1} + t d/dy_i), interleaved.
OperatorExpr terminal_product(std::size_t s);

/// D_s = d^s/dx_1..dx_s - terminal_product(s).
OperatorExpr main_operator(std::size_t s);

/// prod_i (d/dx_i)^{1-alpha_i} (d/dx_{i+1})^{1-beta_i} (t d/dy_i)^{alpha_i beta_i}.
OperatorExpr word_operator(const AssignmentWord& w);

/// Sum of word_operator over all words of length s-1.
OperatorExpr word_operator_sum(std::size_t s);

/// D'_s over s plain variables: d^s/dx_1..dx_s - prod_{i<s} (d/dx_i + d/dx_{i+1}).
OperatorExpr gkt_operator(std::size_t s);

} // namespace gcface

#endif
