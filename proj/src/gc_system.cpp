#include "gcface/gc_system.hpp"

#include <stdexcept>

namespace gcface {

GCSystem::GCSystem(Spectrum lambda) : lambda_(std::move(lambda)) {
  const int n = lambda_.n();
  index_.assign(static_cast<std::size_t>(n) + 2, std::vector<int>(static_cast<std::size_t>(n) + 2, -1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n; ++j) {
      index_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(cells_.size());
      cells_.push_back({i, j});
    }
  }

  const std::size_t d = cells_.size();
  // adds sign * (entry at (i, j)) to the affine form
  auto accumulate = [&](GCConstraint& c, int i, int j, int sign) {
    if (auto idx = cell_index(i, j)) {
      c.coefficients[*idx] += sign;
    } else if (i + j == n + 1) {
      c.constant += sign * lambda_[i];
    } else {
      throw std::logic_error("pattern entry outside the triangle");
    }
  };
  for (const PatternCell& cell : cells_) {
    GCConstraint up{ConstraintKind::up, cell, RationalVector(d, 0), 0};
    accumulate(up, cell.i, cell.j + 1, +1);
    accumulate(up, cell.i, cell.j, -1);
    constraints_.push_back(std::move(up));

    GCConstraint down{ConstraintKind::down, cell, RationalVector(d, 0), 0};
    accumulate(down, cell.i, cell.j, +1);
    accumulate(down, cell.i + 1, cell.j, -1);
    constraints_.push_back(std::move(down));
  }
}

std::optional<std::size_t> GCSystem::cell_index(int i, int j) const noexcept {
  if (i < 1 || j < 1 || i + j > n()) return std::nullopt;
  return static_cast<std::size_t>(index_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
}

std::size_t GCSystem::constraint_index(ConstraintKind kind, int i, int j) const {
  const auto cell = cell_index(i, j);
  if (!cell) throw std::out_of_range("no pattern cell at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return 2 * *cell + (kind == ConstraintKind::up ? 0 : 1);
}

mpq_class GCSystem::entry(const RationalVector& x, int i, int j) const {
  if (auto idx = cell_index(i, j)) return x.at(*idx);
  if (i >= 1 && i <= n() && i + j == n() + 1) return lambda_[i];
  throw std::out_of_range("no pattern entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

mpq_class GCSystem::slack(std::size_t constraint, const RationalVector& x) const {
  const GCConstraint& c = constraints_.at(constraint);
  if (x.size() != dimension()) throw std::invalid_argument("point has wrong dimension");
  mpq_class value = c.constant;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (c.coefficients[k] != 0) value += c.coefficients[k] * x[k];
  }
  return value;
}

bool GCSystem::is_feasible(const RationalVector& x) const {
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    if (slack(c, x) < 0) return false;
  }
  return true;
}

} // namespace gcface
