#ifndef GCFACE_F_POLYNOMIAL_HPP
#define GCFACE_F_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "gcface/composition.hpp"

namespace gcface {

/// Univariate polynomial in t with arbitrary-precision integer coefficients,
/// stored densely lowest degree first with no trailing zeros.
class FPolynomial {
public:
  FPolynomial() = default;
  explicit FPolynomial(std::vector<mpz_class> coefficients);
  static FPolynomial one() { return FPolynomial({mpz_class(1)}); }

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  mpz_class coefficient(int power) const;
  mpz_class leading_coefficient() const;
  mpz_class evaluate(const mpz_class& t) const;

  FPolynomial& operator+=(const FPolynomial& other);
  /// Multiplies by t^power.
  FPolynomial shifted(int power) const;

  /// Highest degree first, e.g. "t^3 + 6t^2 + 11t + 7".
  std::string to_string() const;

  friend bool operator==(const FPolynomial&, const FPolynomial&) = default;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// F_k(t) through the terminal-word recursion
///   F_k(t) = sum_{w in W_{s-1}} F_{r_w(k) * w~}(t) t^{|w|},
/// memoized on the reduced composition with F_() = 1.
FPolynomial f_polynomial(const Composition& k);

/// Coefficients of F_k, one entry per dimension 0..dim Γ_k.
std::vector<mpz_class> f_vector(const Composition& k);

} // namespace gcface

#endif
