#ifndef GCFACE_WORD_TRANSFORMS_HPP
#define GCFACE_WORD_TRANSFORMS_HPP

#include <vector>

#include "gcface/assignment.hpp"
#include "gcface/composition.hpp"

namespace gcface {

/// Integer vectors that may carry zero or negative entries.
using IntVector = std::vector<long long>;

/// d_w(k)_i = k_i - (1 - alpha_i) - (1 - beta_{i-1})
IntVector d_transform(const IntVector& k, const AssignmentWord& w);

/// r_w(k)_i = k_i + 1 - alpha_i - beta_{i-1}
IntVector r_transform(const IntVector& k, const AssignmentWord& w);

/// (x_1, y_1, ..., x_{s-1}, y_{s-1}, x_s). Requires |y| = |x| - 1.
IntVector interleave(const IntVector& x, const IntVector& y);

/// Inverse of interleave on the variable positions: even slots go to x,
/// odd slots to y.
void deinterleave(const IntVector& z, IntVector& x, IntVector& y);

struct WordTransforms {
  IntVector d;
  IntVector r;
  std::vector<int> indicator;
  int weight = 0;
};

/// All four word-derived quantities. Throws std::invalid_argument unless
/// |w| = |k| - 1.
WordTransforms word_transforms(const IntVector& k, const AssignmentWord& w);

/// The composition r_w(k) * w~ whose ladder diagram is the one cut out
/// below the terminals of Γ_k by the word (not reduced).
Composition child_composition(const Composition& k, const AssignmentWord& w);

IntVector to_int_vector(const Composition& k);

} // namespace gcface

#endif
