#ifndef GCFACE_FACE_ENUMERATION_HPP
#define GCFACE_FACE_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "gcface/assignment.hpp"
#include "gcface/diagram_face.hpp"

namespace gcface {

/// Which incoming edges of each interior terminal v_1..v_{s-1} the face uses.
AssignmentWord assignment_of_face(const DiagramFace& f);

/// Edges of g_w: the incoming edges of the terminals selected by `w`, plus
/// the vertical edge into v_0 and the horizontal edge into v_s.
EdgeSet word_edges(const LadderDiagram& diagram, const AssignmentWord& w);

struct FaceDecomposition {
  AssignmentWord word;
  DiagramFace child; // a face of diagram_for(child_composition(k, word))
};

/// Splits a face into its terminal word and the face of the child diagram
/// obtained by deleting the terminal-incident edges. Requires n >= 1.
FaceDecomposition decompose_face(const DiagramFace& f);

/// child ∪ g_w, as a face of `parent`.
DiagramFace recompose(const DiagramPtr& parent, const AssignmentWord& w, const DiagramFace& child);

/// All faces via the terminal-word recursion, sorted by edge bit vector.
std::vector<DiagramFace> enumerate_faces(const DiagramPtr& diagram);
inline std::vector<DiagramFace> enumerate_faces(const Composition& k) { return enumerate_faces(diagram_for(k)); }

inline constexpr std::size_t kDefaultBruteForceEdgeBound = 22;

/// All faces by filtering every edge subset through is_face. Throws
/// std::length_error when the diagram has more than `max_edges` edges.
std::vector<DiagramFace> brute_force_faces(const DiagramPtr& diagram,
                                           std::size_t max_edges = kDefaultBruteForceEdgeBound);

/// f-vector of a face collection: entry i counts faces of dimension i.
std::vector<std::uint64_t> dimension_counts(const std::vector<DiagramFace>& faces);

} // namespace gcface

#endif
