#include "gcface/face_enumeration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "gcface/word_transforms.hpp"

namespace gcface {

namespace {

using EdgeSetList = std::vector<EdgeSet>;

/// Index map from `child` edges into `parent` edges, matched by coordinates.
std::vector<std::size_t> embed_edges(const LadderDiagram& child, const LadderDiagram& parent) {
  std::vector<std::size_t> map;
  map.reserve(child.edge_count());
  for (const GridEdge& e : child.edges()) {
    const auto idx = parent.edge_index(e);
    if (!idx) {
      throw std::logic_error("child diagram edge " + e.to_string() + " is not an edge of the parent diagram");
    }
    map.push_back(*idx);
  }
  return map;
}

std::shared_ptr<const EdgeSetList> face_edge_sets(const DiagramPtr& diagram);

std::shared_ptr<const EdgeSetList> compute_face_edge_sets(const DiagramPtr& diagram) {
  auto out = std::make_shared<EdgeSetList>();
  if (diagram->is_degenerate()) {
    out->push_back(diagram->empty_edge_set());
    return out;
  }
  const Composition& k = diagram->composition();
  for (const AssignmentWord& w : AssignmentWord::all(static_cast<std::size_t>(k.length() - 1))) {
    const DiagramPtr child = diagram_for(child_composition(k, w));
    const std::vector<std::size_t> map = embed_edges(*child, *diagram);
    const EdgeSet g = word_edges(*diagram, w);
    for (const EdgeSet& sigma : *face_edge_sets(child)) {
      EdgeSet merged = g;
      for (std::size_t e : sigma.indices()) merged.set(map[e]);
      out->push_back(std::move(merged));
    }
  }
  std::sort(out->begin(), out->end());
  return out;
}

std::shared_ptr<const EdgeSetList> face_edge_sets(const DiagramPtr& diagram) {
  static std::mutex mutex;
  static std::map<Composition, std::shared_ptr<const EdgeSetList>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(diagram->composition());
    if (it != cache.end()) return it->second;
  }
  auto computed = compute_face_edge_sets(diagram);
  std::lock_guard lock(mutex);
  return cache.emplace(diagram->composition(), std::move(computed)).first->second;
}

} // namespace

AssignmentWord assignment_of_face(const DiagramFace& f) {
  const LadderDiagram& d = f.diagram();
  std::vector<Arrow> entries;
  const auto& terminals = d.terminals();
  for (std::size_t i = 1; i + 1 < terminals.size(); ++i) {
    const auto& l = d.links(*d.vertex_index(terminals[i]));
    const bool h = l.in_horizontal != LadderDiagram::kNone && f.edges().test(static_cast<std::size_t>(l.in_horizontal));
    const bool v = l.in_vertical != LadderDiagram::kNone && f.edges().test(static_cast<std::size_t>(l.in_vertical));
    if (h && v) {
      entries.push_back(Arrow::both);
    } else if (h) {
      entries.push_back(Arrow::right);
    } else if (v) {
      entries.push_back(Arrow::up);
    } else {
      throw std::logic_error("face misses an interior terminal vertex");
    }
  }
  return AssignmentWord(std::move(entries));
}

EdgeSet word_edges(const LadderDiagram& diagram, const AssignmentWord& w) {
  const auto s = static_cast<std::size_t>(diagram.s());
  if (diagram.is_degenerate() || w.length() + 1 != s) {
    throw std::invalid_argument("assignment word length must be s-1 for a non-degenerate diagram");
  }
  EdgeSet out = diagram.empty_edge_set();
  const auto& terminals = diagram.terminals();
  for (std::size_t i = 0; i <= s; ++i) {
    const GridPoint v = terminals[i];
    const int alpha = i == 0 ? 0 : w.alpha(i);
    const int beta = i == s ? 0 : w.beta(i);
    if (alpha) out.set(*diagram.edge_index(GridEdge::horizontal(v.a, v.b)));
    if (beta) out.set(*diagram.edge_index(GridEdge::vertical(v.a, v.b)));
  }
  return out;
}

FaceDecomposition decompose_face(const DiagramFace& f) {
  const LadderDiagram& d = f.diagram();
  if (d.is_degenerate()) throw std::invalid_argument("the degenerate diagram has no decomposition");
  AssignmentWord w = assignment_of_face(f);
  const EdgeSet g = word_edges(d, w);
  if (!g.is_subset_of(f.edges())) throw std::logic_error("face does not contain g_w for its own word");

  EdgeSet rest = f.edges();
  rest.subtract(g);
  for (std::size_t e : rest.indices()) {
    if (d.is_terminal(d.edge_head(e))) throw std::logic_error("terminal-incident edge outside g_w");
  }

  DiagramPtr child = diagram_for(child_composition(d.composition(), w));
  EdgeSet sigma = child->empty_edge_set();
  for (std::size_t e : rest.indices()) {
    const auto idx = child->edge_index(d.edges()[e]);
    if (!idx) throw std::logic_error("edge " + d.edges()[e].to_string() + " falls outside the child diagram");
    sigma.set(*idx);
  }
  return FaceDecomposition{std::move(w), DiagramFace(std::move(child), std::move(sigma))};
}

DiagramFace recompose(const DiagramPtr& parent, const AssignmentWord& w, const DiagramFace& child) {
  if (child.diagram().composition() != child_composition(parent->composition(), w).reduced()) {
    throw std::invalid_argument("child face does not belong to the word's child diagram");
  }
  EdgeSet merged = word_edges(*parent, w);
  const std::vector<std::size_t> map = embed_edges(child.diagram(), *parent);
  for (std::size_t e : child.edges().indices()) merged.set(map[e]);
  return DiagramFace(parent, std::move(merged));
}

std::vector<DiagramFace> enumerate_faces(const DiagramPtr& diagram) {
  std::vector<DiagramFace> faces;
  const auto sets = face_edge_sets(diagram);
  faces.reserve(sets->size());
  for (const EdgeSet& e : *sets) faces.emplace_back(diagram, e);
  return faces;
}

std::vector<DiagramFace> brute_force_faces(const DiagramPtr& diagram, std::size_t max_edges) {
  const std::size_t m = diagram->edge_count();
  if (m > max_edges || m > 63) {
    throw std::length_error("brute-force face search refused: diagram has " + std::to_string(m) +
                            " edges, bound is " + std::to_string(std::min<std::size_t>(max_edges, 63)));
  }
  std::vector<DiagramFace> faces;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (is_face_mask(*diagram, mask)) faces.emplace_back(diagram, EdgeSet::from_mask(m, mask));
  }
  // increasing masks are already in canonical order
  return faces;
}

std::vector<std::uint64_t> dimension_counts(const std::vector<DiagramFace>& faces) {
  std::vector<std::uint64_t> counts;
  for (const DiagramFace& f : faces) {
    const auto dim = static_cast<std::size_t>(f.dimension());
    if (counts.size() <= dim) counts.resize(dim + 1, 0);
    ++counts[dim];
  }
  return counts;
}

} // namespace gcface
