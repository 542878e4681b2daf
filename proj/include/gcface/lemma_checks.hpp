#ifndef GCFACE_LEMMA_CHECKS_HPP
#define GCFACE_LEMMA_CHECKS_HPP

#include <cstddef>
#include <optional>
#include <string>

namespace gcface {

struct IdentityReport {
  std::string name;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
  bool passed() const noexcept { return !counterexample; }
};

/// prod_{i<s} (d/dx_i + d/dx_{i+1} + t d/dy_i) = sum_w D_w, compared both as
/// expanded normal forms and by action on the degree-`degree` truncation of
/// Psi_{2s-1}, for s = 1..max_s.
IdentityReport check_operator_expansion(int max_s, int degree);

/// (D_w (x*y)^{k*e}/(k*e)!)|_{y=0} equals t^{|w|} x^{d_w(k)}/d_w(k)! when
/// e = w~ and d_w(k) >= 0, and 0 otherwise; every monomial of interleaved
/// total degree <= max_degree, every word, s = 1..max_s.
IdentityReport check_monomial_action(int max_s, int max_degree);

/// r_w(d_w(k) + 1) = k for every word and every k with entries in
/// [min_part, max_part], s = 1..max_s.
IdentityReport check_word_inverse(int max_s, int min_part, int max_part);

} // namespace gcface

#endif
