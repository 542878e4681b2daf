#ifndef GCFACE_PDE_CHECK_HPP
#define GCFACE_PDE_CHECK_HPP

#include <string>
#include <vector>

#include "gcface/truncated_series.hpp"

namespace gcface {

struct PdeResidualTerm {
  Exponent exponent;
  TPolynomial coefficient;
};

/// Outcome of checking an operator identity on a truncated series. A
/// nonzero residual is reported here, never thrown.
struct PdeReport {
  std::string identity; // "main" or "gkt"
  int s = 0;
  int truncation_degree = 0;
  int validity_degree = 0;
  std::size_t checked_monomials = 0; // x-monomials of degree <= validity_degree
  std::vector<PdeResidualTerm> residual;
  bool passed() const noexcept { return residual.empty(); }
};

/// (D_s Psi_{2s-1}(x*y; t))|_{y=0} on the degree-N truncation. Throws
/// std::invalid_argument unless s >= 1 and N >= s.
PdeReport verify_main_pde(int s, int truncation_degree);

/// D'_s E_s(x) with E_s(x) = Psi_s(x; 0). Same preconditions.
PdeReport verify_gkt_pde(int s, int truncation_degree);

} // namespace gcface

#endif
