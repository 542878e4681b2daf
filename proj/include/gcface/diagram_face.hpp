#ifndef GCFACE_DIAGRAM_FACE_HPP
#define GCFACE_DIAGRAM_FACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcface/ladder_diagram.hpp"

namespace gcface {

/// True iff `edges` is a union of positive paths covering every terminal:
/// every terminal is reachable from the origin inside the subset, and every
/// included edge has its tail reachable from the origin and its head
/// reaching a terminal, both inside the subset.
bool is_face(const LadderDiagram& diagram, const EdgeSet& edges);

/// Same predicate on a diagram with at most 64 edges, subset given as a mask.
bool is_face_mask(const LadderDiagram& diagram, std::uint64_t mask);

/// Local characterisation: every terminal has an incoming edge, and no
/// non-extremal vertex has incoming edges without outgoing ones or vice
/// versa (the six forbidden incidence patterns).
bool satisfies_local_patterns(const LadderDiagram& diagram, const EdgeSet& edges);

/// The edges of `edges` that lie on some origin-to-terminal path inside
/// `edges`, iterated to a fixpoint.
EdgeSet prune_to_positive_paths(const LadderDiagram& diagram, const EdgeSet& edges);

/// Connected components of the subgraph spanned by `edges` (isolated
/// vertices are not counted).
int component_count(const LadderDiagram& diagram, const EdgeSet& edges);

/// Vertex indices that are endpoints of included edges; the degenerate
/// diagram's empty face has the origin as its one vertex.
std::vector<std::size_t> spanned_vertices(const LadderDiagram& diagram, const EdgeSet& edges);

/// A face of a ladder diagram. Construction validates the edge set.
class DiagramFace {
public:
  /// Throws std::invalid_argument if `edges` is not a face of `*diagram`.
  DiagramFace(DiagramPtr diagram, EdgeSet edges);

  const LadderDiagram& diagram() const noexcept { return *diagram_; }
  const DiagramPtr& diagram_ptr() const noexcept { return diagram_; }
  const EdgeSet& edges() const noexcept { return edges_; }
  int dimension() const noexcept { return dimension_; }
  std::vector<GridPoint> vertex_set() const;
  bool contains(const GridEdge& e) const;

  std::string to_hex() const { return edges_.to_hex(); }

  /// Faces of the same diagram compare by edge set.
  friend bool operator==(const DiagramFace& lhs, const DiagramFace& rhs) { return lhs.edges_ == rhs.edges_; }
  friend auto operator<=>(const DiagramFace& lhs, const DiagramFace& rhs) { return lhs.edges_ <=> rhs.edges_; }

private:
  DiagramPtr diagram_;
  EdgeSet edges_;
  int dimension_ = 0;
};

/// |E| - |V| + 1 for a face. Throws std::logic_error if the subgraph is not
/// connected, which no valid face can be.
int face_dimension(const LadderDiagram& diagram, const EdgeSet& edges);
inline int face_dimension(const DiagramFace& f) { return f.dimension(); }

/// Face lattice element; `std::nullopt` is the adjoined bottom.
using FaceOrBottom = std::optional<DiagramFace>;

/// Edge-set union. Throws std::invalid_argument for faces of different
/// diagrams.
DiagramFace join(const DiagramFace& lhs, const DiagramFace& rhs);

/// Largest face inside the edge-set intersection, or bottom if none.
FaceOrBottom meet(const DiagramFace& lhs, const DiagramFace& rhs);

FaceOrBottom join(const FaceOrBottom& lhs, const FaceOrBottom& rhs);
FaceOrBottom meet(const FaceOrBottom& lhs, const FaceOrBottom& rhs);

/// Partial order of the bottom-adjoined lattice.
bool precedes(const FaceOrBottom& lhs, const FaceOrBottom& rhs);

/// Mirror across the diagonal: the face of the reversed composition whose
/// edges are the images of `f`'s edges under (a, b) -> (b, a).
DiagramFace transpose(const DiagramFace& f);

} // namespace gcface

#endif
