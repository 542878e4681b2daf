#ifndef GCFACE_FACE_CORRESPONDENCE_HPP
#define GCFACE_FACE_CORRESPONDENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcface/diagram_face.hpp"
#include "gcface/gc_polytope.hpp"

namespace gcface {

/// Polytope face -> diagram face: both boundary axes, plus the horizontal
/// edge into (i, j) iff the up constraint of (i, j) is slack somewhere on
/// the face, plus the vertical edge iff the down constraint is. The empty
/// face maps to bottom.
///
/// Throws std::invalid_argument if `diagram` does not belong to the
/// spectrum's block composition, std::logic_error if an edge would fall
/// outside the diagram.
FaceOrBottom phi(const GCSystem& system, const PolytopeFace& face, const DiagramPtr& diagram);

/// Diagram face -> polytope face cut out by turning the constraints of
/// absent edges into equalities, closed to its maximal tight set.
PolytopeFace psi(const GCPolytope& polytope, const DiagramFace& face);

/// The averaging point: boundary entries are lambda, then each x_{i,j}
/// copies x_{i,j+1} when the horizontal edge into (i, j) is absent, copies
/// x_{i+1,j} when only the vertical edge is absent, and averages the two
/// when both edges are present. Coordinates follow the system's cell order.
RationalVector representative_point(const DiagramFace& face, const GCSystem& system);
RationalVector representative_point(const DiagramFace& face, const Spectrum& lambda);

/// Checks strictness at a point: x_{i,j} < x_{i,j+1} exactly when the
/// horizontal edge into (i, j) is in the face, and x_{i,j} > x_{i+1,j}
/// exactly when the vertical edge is. Returns a description of the first
/// violation.
std::optional<std::string> strictness_violation(const DiagramFace& face, const GCSystem& system,
                                                const RationalVector& point);

struct IsomorphismReport {
  std::string spectrum;
  std::string composition;
  std::vector<std::uint64_t> polytope_counts; // nonempty faces by dimension
  std::vector<std::uint64_t> diagram_counts;
  std::size_t polytope_faces = 0; // nonempty
  std::size_t diagram_faces = 0;
  bool bijection = false;
  bool order_preserving = false;
  bool dimension_preserving = false;
  bool round_trips = false;
  bool empty_to_bottom = false;
  std::optional<std::string> counterexample;

  bool passed() const noexcept {
    return bijection && order_preserving && dimension_preserving && round_trips && empty_to_bottom &&
           !counterexample;
  }
};

/// Compares the polyhedral oracle's face lattice of P_lambda with the
/// enumerated faces of its ladder diagram. Failures are reported, not
/// thrown; exceeding the oracle bound throws std::length_error.
IsomorphismReport verify_isomorphism(const Spectrum& lambda, int max_n = kDefaultOracleMaxN);

} // namespace gcface

#endif
