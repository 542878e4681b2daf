#include "gcface/diagram_face.hpp"

#include <numeric>
#include <stdexcept>

namespace gcface {

namespace {

using Links = LadderDiagram::VertexLinks;

/// Forward reachability from the origin and backward reachability to a
/// terminal, restricted to edges accepted by `has`. Vertices are stored in
/// topological order, so one sweep each way suffices.
template <typename HasEdge>
void sweep(const LadderDiagram& d, HasEdge has, std::vector<char>& from_origin, std::vector<char>& to_terminal) {
  const std::size_t nv = d.vertex_count();
  from_origin.assign(nv, 0);
  to_terminal.assign(nv, 0);
  from_origin[d.origin_index()] = 1;
  for (std::size_t v = 1; v < nv; ++v) {
    const Links& l = d.links(v);
    bool r = false;
    if (l.in_horizontal != LadderDiagram::kNone && has(l.in_horizontal)) {
      r = r || from_origin[d.edge_tail(static_cast<std::size_t>(l.in_horizontal))];
    }
    if (l.in_vertical != LadderDiagram::kNone && has(l.in_vertical)) {
      r = r || from_origin[d.edge_tail(static_cast<std::size_t>(l.in_vertical))];
    }
    from_origin[v] = r;
  }
  for (std::size_t v = nv; v-- > 0;) {
    if (d.is_terminal(v)) {
      to_terminal[v] = 1;
      continue;
    }
    const Links& l = d.links(v);
    bool r = false;
    if (l.out_horizontal != LadderDiagram::kNone && has(l.out_horizontal)) {
      r = r || to_terminal[d.edge_head(static_cast<std::size_t>(l.out_horizontal))];
    }
    if (l.out_vertical != LadderDiagram::kNone && has(l.out_vertical)) {
      r = r || to_terminal[d.edge_head(static_cast<std::size_t>(l.out_vertical))];
    }
    to_terminal[v] = r;
  }
}

template <typename HasEdge>
bool check_face(const LadderDiagram& d, HasEdge has, std::vector<char>& fwd, std::vector<char>& bwd) {
  if (d.is_degenerate()) {
    return true; // no edges exist; the only subset is the empty one
  }
  sweep(d, has, fwd, bwd);
  for (const GridPoint& t : d.terminals()) {
    if (!fwd[*d.vertex_index(t)]) return false;
  }
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    if (!has(static_cast<int>(e))) continue;
    if (!fwd[d.edge_tail(e)] || !bwd[d.edge_head(e)]) return false;
  }
  return true;
}

void require_width(const LadderDiagram& d, const EdgeSet& edges) {
  if (edges.width() != d.edge_count()) {
    throw std::invalid_argument("edge set width does not match diagram");
  }
}

void require_same_diagram(const DiagramFace& lhs, const DiagramFace& rhs) {
  if (lhs.diagram_ptr() != rhs.diagram_ptr() && lhs.diagram().composition() != rhs.diagram().composition()) {
    throw std::invalid_argument("faces belong to different ladder diagrams");
  }
}

} // namespace

bool is_face(const LadderDiagram& diagram, const EdgeSet& edges) {
  require_width(diagram, edges);
  std::vector<char> fwd;
  std::vector<char> bwd;
  return check_face(
      diagram, [&](int e) { return edges.test(static_cast<std::size_t>(e)); }, fwd, bwd);
}

bool is_face_mask(const LadderDiagram& diagram, std::uint64_t mask) {
  if (diagram.edge_count() > 64) throw std::invalid_argument("mask form needs at most 64 edges");
  thread_local std::vector<char> fwd;
  thread_local std::vector<char> bwd;
  return check_face(
      diagram, [mask](int e) { return ((mask >> e) & 1U) != 0; }, fwd, bwd);
}

bool satisfies_local_patterns(const LadderDiagram& diagram, const EdgeSet& edges) {
  require_width(diagram, edges);
  auto has = [&](int e) { return e != LadderDiagram::kNone && edges.test(static_cast<std::size_t>(e)); };
  for (std::size_t v = 0; v < diagram.vertex_count(); ++v) {
    const Links& l = diagram.links(v);
    const bool in = has(l.in_horizontal) || has(l.in_vertical);
    const bool out = has(l.out_horizontal) || has(l.out_vertical);
    if (diagram.is_terminal(v)) {
      if (!diagram.is_degenerate() && !in) return false;
      continue;
    }
    if (v == diagram.origin_index()) continue;
    if (in != out) return false;
  }
  return true;
}

EdgeSet prune_to_positive_paths(const LadderDiagram& diagram, const EdgeSet& edges) {
  require_width(diagram, edges);
  EdgeSet current = edges;
  std::vector<char> fwd;
  std::vector<char> bwd;
  while (true) {
    sweep(
        diagram, [&](int e) { return current.test(static_cast<std::size_t>(e)); }, fwd, bwd);
    EdgeSet next = diagram.empty_edge_set();
    for (std::size_t e : current.indices()) {
      if (fwd[diagram.edge_tail(e)] && bwd[diagram.edge_head(e)]) next.set(e);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<std::size_t> spanned_vertices(const LadderDiagram& diagram, const EdgeSet& edges) {
  require_width(diagram, edges);
  std::vector<char> seen(diagram.vertex_count(), 0);
  for (std::size_t e : edges.indices()) {
    seen[diagram.edge_tail(e)] = 1;
    seen[diagram.edge_head(e)] = 1;
  }
  if (diagram.is_degenerate()) seen[diagram.origin_index()] = 1;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

int component_count(const LadderDiagram& diagram, const EdgeSet& edges) {
  require_width(diagram, edges);
  std::vector<std::size_t> parent(diagram.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t e : edges.indices()) {
    const std::size_t a = find(diagram.edge_tail(e));
    const std::size_t b = find(diagram.edge_head(e));
    if (a != b) parent[a] = b;
  }
  int components = 0;
  for (std::size_t v : spanned_vertices(diagram, edges)) {
    if (find(v) == v) ++components;
  }
  return components;
}

int face_dimension(const LadderDiagram& diagram, const EdgeSet& edges) {
  const int components = component_count(diagram, edges);
  if (components != 1) {
    throw std::logic_error("face subgraph has " + std::to_string(components) + " components");
  }
  const auto e = static_cast<int>(edges.count());
  const auto v = static_cast<int>(spanned_vertices(diagram, edges).size());
  return e - v + 1;
}

DiagramFace::DiagramFace(DiagramPtr diagram, EdgeSet edges) : diagram_(std::move(diagram)), edges_(std::move(edges)) {
  if (!diagram_) throw std::invalid_argument("null diagram");
  if (!is_face(*diagram_, edges_)) {
    throw std::invalid_argument("edge set " + edges_.to_hex() + " is not a face of the ladder diagram (" +
                                diagram_->composition().to_string() + ")");
  }
  dimension_ = face_dimension(*diagram_, edges_);
}

std::vector<GridPoint> DiagramFace::vertex_set() const {
  std::vector<GridPoint> out;
  for (std::size_t v : spanned_vertices(*diagram_, edges_)) out.push_back(diagram_->vertices()[v]);
  return out;
}

bool DiagramFace::contains(const GridEdge& e) const {
  const auto idx = diagram_->edge_index(e);
  return idx && edges_.test(*idx);
}

DiagramFace join(const DiagramFace& lhs, const DiagramFace& rhs) {
  require_same_diagram(lhs, rhs);
  return DiagramFace(lhs.diagram_ptr(), lhs.edges() | rhs.edges());
}

FaceOrBottom meet(const DiagramFace& lhs, const DiagramFace& rhs) {
  require_same_diagram(lhs, rhs);
  const LadderDiagram& d = lhs.diagram();
  EdgeSet core = prune_to_positive_paths(d, lhs.edges() & rhs.edges());
  if (!is_face(d, core)) return std::nullopt;
  return DiagramFace(lhs.diagram_ptr(), std::move(core));
}

FaceOrBottom join(const FaceOrBottom& lhs, const FaceOrBottom& rhs) {
  if (!lhs) return rhs;
  if (!rhs) return lhs;
  return join(*lhs, *rhs);
}

FaceOrBottom meet(const FaceOrBottom& lhs, const FaceOrBottom& rhs) {
  if (!lhs || !rhs) return std::nullopt;
  return meet(*lhs, *rhs);
}

bool precedes(const FaceOrBottom& lhs, const FaceOrBottom& rhs) {
  if (!lhs) return true;
  if (!rhs) return false;
  require_same_diagram(*lhs, *rhs);
  return lhs->edges().is_subset_of(rhs->edges());
}

DiagramFace transpose(const DiagramFace& f) {
  const LadderDiagram& d = f.diagram();
  DiagramPtr mirrored = diagram_for(d.composition().reversed());
  EdgeSet out = mirrored->empty_edge_set();
  for (std::size_t e : f.edges().indices()) {
    const GridEdge& edge = d.edges()[e];
    const GridEdge image{edge.kind == EdgeKind::horizontal ? EdgeKind::vertical : EdgeKind::horizontal,
                         {edge.head.b, edge.head.a}};
    const auto idx = mirrored->edge_index(image);
    if (!idx) throw std::logic_error("mirrored edge " + image.to_string() + " missing from reversed diagram");
    out.set(*idx);
  }
  return DiagramFace(std::move(mirrored), std::move(out));
}

} // namespace gcface
