#include "gcface/rational_linalg.hpp"

#include <stdexcept>

namespace gcface {

namespace {

using IntegerRow = std::vector<mpz_class>;

IntegerRow clear_denominators(const RationalVector& row) {
  mpz_class l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

void divide_by_content(IntegerRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

/// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<IntegerRow>& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const mpz_class a = m[row][col];
      const mpz_class b = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] = a * m[r][c] - b * m[row][c];
      divide_by_content(m[r]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t matrix_rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  std::vector<IntegerRow> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != columns) throw std::invalid_argument("ragged matrix");
    m.push_back(clear_denominators(r));
    divide_by_content(m.back());
  }
  return echelon(m, columns).size();
}

std::optional<RationalVector> solve_square(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  if (n == 0) return RationalVector{};
  std::vector<IntegerRow> m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("matrix is not square");
    RationalVector augmented = a[i];
    augmented.push_back(b[i]);
    m.push_back(clear_denominators(augmented));
    divide_by_content(m.back());
  }
  const auto pivots = echelon(m, n);
  if (pivots.size() != n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    mpq_class acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= mpq_class(m[i][j]) * x[j];
    x[i] = acc / mpq_class(m[i][i]);
    x[i].canonicalize();
  }
  return x;
}

} // namespace gcface
