#ifndef GCFACE_RATIONAL_LINALG_HPP
#define GCFACE_RATIONAL_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace gcface {

using RationalVector = std::vector<mpq_class>;
using RationalMatrix = std::vector<RationalVector>; // row-major

/// Rank by fraction-free elimination: rows are scaled to integers, each
/// elimination step cross-multiplies, and rows are divided by their content.
std::size_t matrix_rank(const RationalMatrix& rows);

/// Unique solution of the square system A x = b, or nullopt when A is
/// singular.
std::optional<RationalVector> solve_square(const RationalMatrix& a, const RationalVector& b);

} // namespace gcface

#endif
