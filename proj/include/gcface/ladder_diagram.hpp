#ifndef GCFACE_LADDER_DIAGRAM_HPP
#define GCFACE_LADDER_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcface/bitvector.hpp"
#include "gcface/composition.hpp"

namespace gcface {

using EdgeSet = BitVector;

/// Lattice point (a, b) of the quarter plane.
struct GridPoint {
  int a = 0;
  int b = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class EdgeKind : unsigned char { horizontal, vertical };

/// A unit edge named by its head (i, j):
///   horizontal  ((i-1, j), (i, j))
///   vertical    ((i, j-1), (i, j))
struct GridEdge {
  EdgeKind kind = EdgeKind::horizontal;
  GridPoint head;

  GridPoint tail() const noexcept {
    return kind == EdgeKind::horizontal ? GridPoint{head.a - 1, head.b} : GridPoint{head.a, head.b - 1};
  }

  static GridEdge horizontal(int i, int j) { return {EdgeKind::horizontal, {i, j}}; }
  static GridEdge vertical(int i, int j) { return {EdgeKind::vertical, {i, j}}; }

  std::string to_string() const;

  friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

/// The ladder diagram of a composition: the induced subgraph of the
/// up/right quarter-plane grid on all points dominated by some terminal
/// vertex (n_i, n - n_i).
///
/// Edges are indexed by head point in lexicographic (a, b) order, the
/// horizontal edge into a point before the vertical one. Vertices are
/// indexed by (a + b, a), which is a topological order for the edge
/// directions.
class LadderDiagram {
public:
  static constexpr int kNone = -1;

  struct VertexLinks {
    int in_horizontal = kNone;
    int in_vertical = kNone;
    int out_horizontal = kNone;
    int out_vertical = kNone;
  };

  /// Builds the diagram of `k.reduced()`. An empty or all-zero composition
  /// gives the degenerate diagram: the origin alone, with no edges.
  explicit LadderDiagram(const Composition& k);

  const Composition& composition() const noexcept { return composition_; }
  int n() const noexcept { return n_; }
  int s() const noexcept { return composition_.length(); }
  bool is_degenerate() const noexcept { return n_ == 0; }

  const std::vector<GridPoint>& vertices() const noexcept { return vertices_; }
  const std::vector<GridEdge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  /// v_0 = (0, n), ..., v_s = (n, 0). The degenerate diagram has the single
  /// terminal (0, 0).
  const std::vector<GridPoint>& terminals() const noexcept { return terminals_; }
  bool is_terminal(std::size_t vertex) const { return terminal_flag_.at(vertex); }
  bool is_extremal(std::size_t vertex) const { return vertex == origin_index() || is_terminal(vertex); }
  std::size_t origin_index() const noexcept { return 0; }

  bool contains(GridPoint p) const noexcept;
  std::optional<std::size_t> vertex_index(GridPoint p) const noexcept;
  std::optional<std::size_t> edge_index(const GridEdge& e) const noexcept;

  std::size_t edge_tail(std::size_t edge) const { return edge_tail_.at(edge); }
  std::size_t edge_head(std::size_t edge) const { return edge_head_.at(edge); }
  const VertexLinks& links(std::size_t vertex) const { return links_.at(vertex); }

  /// Cycle rank of the whole diagram, sum_{i<j} k_i k_j.
  long long dimension() const noexcept { return composition_.top_dimension(); }

  EdgeSet full_edge_set() const;
  EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }

private:
  Composition composition_;
  int n_ = 0;
  std::vector<GridPoint> vertices_;
  std::vector<GridEdge> edges_;
  std::vector<GridPoint> terminals_;
  std::vector<bool> terminal_flag_;
  std::vector<std::size_t> edge_tail_;
  std::vector<std::size_t> edge_head_;
  std::vector<VertexLinks> links_;
  // column heights: point (a, b) is in the diagram iff 0 <= a <= n and b <= height_[a]
  std::vector<int> height_;
  std::vector<std::size_t> column_offset_;
  std::vector<std::size_t> vertex_by_column_;
};

using DiagramPtr = std::shared_ptr<const LadderDiagram>;

/// Shared, memoized diagram for the reduced form of `k`.
DiagramPtr diagram_for(const Composition& k);

} // namespace gcface

#endif
