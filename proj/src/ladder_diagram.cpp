#include "gcface/ladder_diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gcface {

std::string GridEdge::to_string() const {
  const GridPoint t = tail();
  return "((" + std::to_string(t.a) + "," + std::to_string(t.b) + "),(" + std::to_string(head.a) + "," +
         std::to_string(head.b) + "))";
}

LadderDiagram::LadderDiagram(const Composition& k) : composition_(k.reduced()), n_(composition_.total()) {
  const std::vector<int> sums = composition_.partial_sums();
  if (n_ == 0) {
    terminals_.push_back({0, 0});
  } else {
    for (int ni : sums) terminals_.push_back({ni, n_ - ni});
  }

  height_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int a = 0; a <= n_; ++a) {
    // smallest partial sum n_i >= a bounds the column
    const auto it = std::lower_bound(sums.begin(), sums.end(), a);
    height_[static_cast<std::size_t>(a)] = n_ - *it;
  }

  column_offset_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (int a = 0; a <= n_; ++a) {
    column_offset_[static_cast<std::size_t>(a) + 1] =
        column_offset_[static_cast<std::size_t>(a)] + static_cast<std::size_t>(height_[static_cast<std::size_t>(a)]) + 1;
  }

  for (int a = 0; a <= n_; ++a) {
    for (int b = 0; b <= height_[static_cast<std::size_t>(a)]; ++b) vertices_.push_back({a, b});
  }
  std::sort(vertices_.begin(), vertices_.end(), [](const GridPoint& p, const GridPoint& q) {
    if (p.a + p.b != q.a + q.b) return p.a + p.b < q.a + q.b;
    return p.a < q.a;
  });
  vertex_by_column_.assign(vertices_.size(), 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const GridPoint p = vertices_[v];
    vertex_by_column_[column_offset_[static_cast<std::size_t>(p.a)] + static_cast<std::size_t>(p.b)] = v;
  }

  terminal_flag_.assign(vertices_.size(), false);
  for (const GridPoint& t : terminals_) terminal_flag_[*vertex_index(t)] = true;

  links_.assign(vertices_.size(), VertexLinks{});
  for (int a = 0; a <= n_; ++a) {
    for (int b = 0; b <= height_[static_cast<std::size_t>(a)]; ++b) {
      const std::size_t head = *vertex_index({a, b});
      if (a >= 1 && contains({a - 1, b})) {
        const std::size_t tail = *vertex_index({a - 1, b});
        const int idx = static_cast<int>(edges_.size());
        edges_.push_back(GridEdge::horizontal(a, b));
        edge_tail_.push_back(tail);
        edge_head_.push_back(head);
        links_[head].in_horizontal = idx;
        links_[tail].out_horizontal = idx;
      }
      if (b >= 1) {
        const std::size_t tail = *vertex_index({a, b - 1});
        const int idx = static_cast<int>(edges_.size());
        edges_.push_back(GridEdge::vertical(a, b));
        edge_tail_.push_back(tail);
        edge_head_.push_back(head);
        links_[head].in_vertical = idx;
        links_[tail].out_vertical = idx;
      }
    }
  }
}

bool LadderDiagram::contains(GridPoint p) const noexcept {
  return p.a >= 0 && p.b >= 0 && p.a <= n_ && p.b <= height_[static_cast<std::size_t>(p.a)];
}

std::optional<std::size_t> LadderDiagram::vertex_index(GridPoint p) const noexcept {
  if (!contains(p)) return std::nullopt;
  return vertex_by_column_[column_offset_[static_cast<std::size_t>(p.a)] + static_cast<std::size_t>(p.b)];
}

std::optional<std::size_t> LadderDiagram::edge_index(const GridEdge& e) const noexcept {
  const auto head = vertex_index(e.head);
  if (!head) return std::nullopt;
  const VertexLinks& l = links_[*head];
  const int idx = e.kind == EdgeKind::horizontal ? l.in_horizontal : l.in_vertical;
  if (idx == kNone) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

EdgeSet LadderDiagram::full_edge_set() const {
  EdgeSet all(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) all.set(e);
  return all;
}

DiagramPtr diagram_for(const Composition& k) {
  static std::mutex mutex;
  static std::map<Composition, DiagramPtr> cache;
  const Composition key = k.reduced();
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto diagram = std::make_shared<const LadderDiagram>(key);
  cache.emplace(key, diagram);
  return diagram;
}

} // namespace gcface
