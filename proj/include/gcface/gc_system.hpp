#ifndef GCFACE_GC_SYSTEM_HPP
#define GCFACE_GC_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gcface/rational_linalg.hpp"
#include "gcface/spectrum.hpp"

namespace gcface {

/// Cell (i, j) of the interlacing pattern, i, j >= 1, i + j <= n.
struct PatternCell {
  int i = 0;
  int j = 0;
  friend bool operator==(const PatternCell&, const PatternCell&) = default;
};

enum class ConstraintKind : unsigned char {
  up,  ///< x_{i,j+1} >= x_{i,j}; pairs with the horizontal edge ((i-1,j),(i,j))
  down ///< x_{i,j} >= x_{i+1,j}; pairs with the vertical edge ((i,j-1),(i,j))
};

/// coefficients . x + constant >= 0, boundary entries already substituted.
struct GCConstraint {
  ConstraintKind kind = ConstraintKind::up;
  PatternCell cell;
  RationalVector coefficients;
  mpq_class constant;
};

/// The Gelfand-Cetlin inequality system of a spectrum. Free coordinates are
/// the cells in lexicographic (i, j) order; constraints come in the same
/// order, the up constraint of a cell before its down constraint.
class GCSystem {
public:
  explicit GCSystem(Spectrum lambda);

  const Spectrum& spectrum() const noexcept { return lambda_; }
  int n() const noexcept { return lambda_.n(); }
  std::size_t dimension() const noexcept { return cells_.size(); }
  const std::vector<PatternCell>& cells() const noexcept { return cells_; }
  std::optional<std::size_t> cell_index(int i, int j) const noexcept;

  const std::vector<GCConstraint>& constraints() const noexcept { return constraints_; }
  std::size_t constraint_index(ConstraintKind kind, int i, int j) const;

  /// x_{i,j} at the point, or lambda_i on the boundary i + j = n + 1.
  mpq_class entry(const RationalVector& x, int i, int j) const;

  mpq_class slack(std::size_t constraint, const RationalVector& x) const;
  bool is_tight(std::size_t constraint, const RationalVector& x) const { return slack(constraint, x) == 0; }
  bool is_feasible(const RationalVector& x) const;

private:
  Spectrum lambda_;
  std::vector<PatternCell> cells_;
  std::vector<std::vector<int>> index_; // index_[i][j], -1 outside
  std::vector<GCConstraint> constraints_;
};

} // namespace gcface

#endif
