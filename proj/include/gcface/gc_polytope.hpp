#ifndef GCFACE_GC_POLYTOPE_HPP
#define GCFACE_GC_POLYTOPE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gcface/bitvector.hpp"
#include "gcface/gc_system.hpp"

namespace gcface {

/// A face of P_lambda, keyed by its vertex set. `tight_set` holds every
/// constraint tight on the whole face (implicit equalities included).
struct PolytopeFace {
  BitVector vertices;
  BitVector tight_set;
  int dim = -1; // -1 for the empty face
  std::optional<RationalVector> representative; // centroid of the vertices

  bool empty() const noexcept { return vertices.none(); }
  bool is_subface_of(const PolytopeFace& other) const { return vertices.is_subset_of(other.vertices); }
};

inline constexpr int kDefaultOracleMaxN = 4;

/// Exact vertex/facet description of a GC polytope computed from its
/// inequality system alone.
///
/// Vertices come from every d-subset of constraints whose equality system is
/// nonsingular; each solution is kept when feasible and deduplicated by exact
/// equality. Faces are the closed vertex sets under W -> {v : v is tight on
/// every constraint tight on all of W}.
class GCPolytope {
public:
  /// Throws std::length_error when n exceeds `max_n`.
  explicit GCPolytope(GCSystem system, int max_n = kDefaultOracleMaxN);

  const GCSystem& system() const noexcept { return system_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
  const std::vector<BitVector>& vertex_tightness() const noexcept { return tightness_; }

  /// The smallest face containing the given vertices.
  PolytopeFace face_of(const BitVector& vertex_set) const;

  /// Vertices satisfying every constraint in `constraints` with equality.
  BitVector vertices_tight_on(const BitVector& constraints) const;

  /// Every face including the empty face and P_lambda itself, ordered by
  /// (dim, vertex bit vector).
  std::vector<PolytopeFace> face_lattice() const;

  /// Affine dimension of a set of vertices, -1 when empty.
  int affine_dimension(const BitVector& vertex_set) const;

private:
  GCSystem system_;
  std::vector<RationalVector> vertices_;
  std::vector<BitVector> tightness_;
};

/// Convenience: the oracle's faces for a system.
std::vector<PolytopeFace> face_lattice(const GCSystem& system, int max_n = kDefaultOracleMaxN);

} // namespace gcface

#endif
