#include "gcface/pde_check.hpp"

#include <stdexcept>

#include "gcface/operator_expr.hpp"

namespace gcface {

namespace {

void require_bounds(int s, int degree) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  if (degree < s) throw std::invalid_argument("truncation degree must be at least s");
}

PdeReport collect(std::string identity, int s, int degree, const TruncatedSeries& residual) {
  PdeReport report;
  report.identity = std::move(identity);
  report.s = s;
  report.truncation_degree = degree;
  report.validity_degree = residual.validity_degree();
  report.checked_monomials = exponents_up_to(residual.num_vars(), residual.validity_degree()).size();
  for (const auto& [e, c] : residual.terms()) report.residual.push_back({e, c});
  return report;
}

} // namespace

PdeReport verify_main_pde(int s, int truncation_degree) {
  require_bounds(s, truncation_degree);
  const auto vars = static_cast<std::size_t>(2 * s - 1);
  const TruncatedSeries psi = truncate_psi(static_cast<int>(vars), truncation_degree);
  const TruncatedSeries applied = main_operator(static_cast<std::size_t>(s)).apply(psi);
  std::vector<std::size_t> xs;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(s); ++i) xs.push_back(x_var(i));
  return collect("main", s, truncation_degree, applied.restrict_to(xs));
}

PdeReport verify_gkt_pde(int s, int truncation_degree) {
  require_bounds(s, truncation_degree);
  const TruncatedSeries e_s = truncate_psi(s, truncation_degree).at_t_zero();
  return collect("gkt", s, truncation_degree, gkt_operator(static_cast<std::size_t>(s)).apply(e_s));
}

} // namespace gcface
