#ifndef GCFACE_TRUNCATED_SERIES_HPP
#define GCFACE_TRUNCATED_SERIES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gcface {

/// Polynomial in t with exact rational coefficients, lowest degree first,
/// no trailing zeros.
class TPolynomial {
public:
  TPolynomial() = default;
  explicit TPolynomial(std::vector<mpq_class> coefficients);
  static TPolynomial constant(const mpq_class& c) { return TPolynomial({c}); }

  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class at_zero() const { return is_zero() ? mpq_class(0) : coeffs_.front(); }

  TPolynomial& operator+=(const TPolynomial& other);
  TPolynomial& operator-=(const TPolynomial& other);
  TPolynomial& operator*=(const mpq_class& c);
  TPolynomial times_t() const;

  std::string to_string() const;

  friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

using Exponent = std::vector<int>;

/// Multivariate power series truncated by total degree, with coefficients
/// in Q[t]. Coefficients are exact for every monomial of total degree up
/// to `validity_degree()`; nothing above that degree is stored.
class TruncatedSeries {
public:
  TruncatedSeries(std::size_t num_vars, int validity_degree);

  std::size_t num_vars() const noexcept { return num_vars_; }
  int validity_degree() const noexcept { return validity_; }
  const std::map<Exponent, TPolynomial>& terms() const noexcept { return terms_; }

  /// Accumulates `c * x^e`. Throws std::invalid_argument when the exponent
  /// has the wrong arity, a negative entry, or degree above the validity bound.
  void add_term(const Exponent& e, const TPolynomial& c);
  TPolynomial coefficient(const Exponent& e) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Validity of the result is the minimum of the operands'.
  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries scaled(const mpq_class& c) const;
  TruncatedSeries times_t() const;

  /// d/dx_var; lowers the validity degree by one. Throws std::domain_error
  /// on a series with validity degree 0.
  TruncatedSeries derivative(std::size_t var) const;

  /// Sets every variable not in `kept` to zero and renumbers the survivors
  /// in the order given.
  TruncatedSeries restrict_to(const std::vector<std::size_t>& kept) const;

  /// Specialises t = 0.
  TruncatedSeries at_t_zero() const;

private:
  void accumulate(const Exponent& e, const TPolynomial& c);

  std::size_t num_vars_;
  int validity_;
  std::map<Exponent, TPolynomial> terms_;
};

int total_degree(const Exponent& e) noexcept;

/// All exponent vectors of `num_vars` entries with total degree <= max_degree,
/// in lexicographic order.
std::vector<Exponent> exponents_up_to(std::size_t num_vars, int max_degree);

/// Product of factorials of the entries.
mpz_class factorial_product(const Exponent& e);

/// Psi_s(x; t) = sum_k F_k(t) x^k / k!, every |k| <= max_degree.
/// Psi_0 = 1 as a series in zero variables.
TruncatedSeries truncate_psi(int s, int max_degree);

} // namespace gcface

#endif
