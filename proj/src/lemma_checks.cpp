#include "gcface/lemma_checks.hpp"

#include <algorithm>

#include "gcface/operator_expr.hpp"
#include "gcface/truncated_series.hpp"
#include "gcface/word_transforms.hpp"

namespace gcface {

namespace {

std::string join_ints(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

} // namespace

IdentityReport check_operator_expansion(int max_s, int degree) {
  IdentityReport report{"operator_expansion", 0, std::nullopt};
  for (int s = 1; s <= max_s && report.passed(); ++s) {
    const auto vars = static_cast<std::size_t>(2 * s - 1);
    const OperatorExpr lhs = terminal_product(static_cast<std::size_t>(s));
    const OperatorExpr rhs = word_operator_sum(static_cast<std::size_t>(s));
    ++report.cases;
    if (lhs.expand(vars) != rhs.expand(vars)) {
      report.counterexample = "normal forms differ at s = " + std::to_string(s);
      break;
    }
    const TruncatedSeries psi = truncate_psi(static_cast<int>(vars), degree);
    const TruncatedSeries difference = lhs.apply(psi) - rhs.apply(psi);
    ++report.cases;
    if (!difference.is_zero()) {
      report.counterexample = "actions on Psi_" + std::to_string(vars) + " differ at s = " + std::to_string(s);
    }
  }
  return report;
}

IdentityReport check_monomial_action(int max_s, int max_degree) {
  IdentityReport report{"monomial_action", 0, std::nullopt};
  for (int s = 1; s <= max_s; ++s) {
    const auto vars = static_cast<std::size_t>(2 * s - 1);
    std::vector<std::size_t> xs;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(s); ++i) xs.push_back(x_var(i));
    const auto words = AssignmentWord::all(static_cast<std::size_t>(s - 1));
    std::vector<OperatorExpr> operators;
    for (const auto& w : words) operators.push_back(word_operator(w));

    for (const Exponent& z : exponents_up_to(vars, max_degree)) {
      TruncatedSeries monomial(vars, std::max(max_degree, s - 1));
      monomial.add_term(z, TPolynomial::constant(mpq_class(1) / mpq_class(factorial_product(z))));
      IntVector k;
      IntVector e;
      deinterleave(IntVector(z.begin(), z.end()), k, e);

      for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const AssignmentWord& w = words[wi];
        ++report.cases;
        const TruncatedSeries actual = operators[wi].apply(monomial).restrict_to(xs);

        TruncatedSeries expected(static_cast<std::size_t>(s), actual.validity_degree());
        const IntVector d = d_transform(k, w);
        const std::vector<int> ind = w.indicator();
        const bool matches = std::equal(e.begin(), e.end(), ind.begin(), ind.end());
        const bool nonnegative = std::all_of(d.begin(), d.end(), [](long long v) { return v >= 0; });
        if (matches && nonnegative) {
          const Exponent de(d.begin(), d.end());
          std::vector<mpq_class> coeffs(static_cast<std::size_t>(w.weight()) + 1, 0);
          coeffs.back() = mpq_class(1) / mpq_class(factorial_product(de));
          expected.add_term(de, TPolynomial(std::move(coeffs)));
        }
        if ((actual - expected).is_zero()) continue;
        report.counterexample = "D_" + w.to_string() + " on k = " + join_ints(k) + ", e = " + join_ints(e);
        return report;
      }
    }
  }
  return report;
}

IdentityReport check_word_inverse(int max_s, int min_part, int max_part) {
  IdentityReport report{"word_inverse", 0, std::nullopt};
  for (int s = 1; s <= max_s; ++s) {
    IntVector k(static_cast<std::size_t>(s), min_part);
    const auto words = AssignmentWord::all(static_cast<std::size_t>(s - 1));
    while (true) {
      for (const auto& w : words) {
        ++report.cases;
        IntVector shifted = d_transform(k, w);
        for (auto& v : shifted) v += 1;
        if (r_transform(shifted, w) != k) {
          report.counterexample = "w = " + w.to_string() + ", k = " + join_ints(k);
          return report;
        }
      }
      std::size_t pos = k.size();
      while (pos > 0 && k[pos - 1] == max_part) k[--pos] = min_part;
      if (pos == 0) break;
      ++k[pos - 1];
    }
  }
  return report;
}

} // namespace gcface
