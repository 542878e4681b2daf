#ifndef GCFACE_TESTS_SUPPORT_HPP
#define GCFACE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gcface/composition.hpp"
#include "gcface/ladder_diagram.hpp"

namespace gcface::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x9e3779b97f4a7c15ULL);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random composition with `parts` entries in [lo, hi].
inline Composition random_composition(int parts, int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(parts));
  for (auto& x : v) x = uniform(lo, hi);
  return Composition(v);
}

inline std::vector<Composition> compositions_up_to(int max_n) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& k : compositions_of(n)) out.push_back(k);
  }
  return out;
}

/// Every monotone lattice path from the origin to `target` inside the
/// diagram, as a set of edge indices.
inline void paths_to(const LadderDiagram& d, GridPoint at, GridPoint target, std::vector<std::size_t>& prefix,
                     std::vector<std::vector<std::size_t>>& out) {
  if (at == target) {
    out.push_back(prefix);
    return;
  }
  if (at.a < target.a) {
    const GridEdge e = GridEdge::horizontal(at.a + 1, at.b);
    if (auto idx = d.edge_index(e)) {
      prefix.push_back(*idx);
      paths_to(d, {at.a + 1, at.b}, target, prefix, out);
      prefix.pop_back();
    }
  }
  if (at.b < target.b) {
    const GridEdge e = GridEdge::vertical(at.a, at.b + 1);
    if (auto idx = d.edge_index(e)) {
      prefix.push_back(*idx);
      paths_to(d, {at.a, at.b + 1}, target, prefix, out);
      prefix.pop_back();
    }
  }
}

/// Faces as unions of positive paths, one or more per terminal. Built from
/// path lists only; shares nothing with the library's face predicate.
inline std::set<std::vector<bool>> path_union_faces(const LadderDiagram& d) {
  const std::size_t m = d.edge_count();
  std::set<std::vector<bool>> result;
  if (d.is_degenerate()) {
    result.insert(std::vector<bool>(m, false));
    return result;
  }
  // unions reachable per terminal, then combined terminal by terminal
  std::set<std::vector<bool>> partial{std::vector<bool>(m, false)};
  for (const GridPoint& t : d.terminals()) {
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> prefix;
    paths_to(d, {0, 0}, t, prefix, paths);
    std::set<std::vector<bool>> unions; // nonempty unions of paths to t
    for (const auto& p : paths) {
      std::vector<bool> bits(m, false);
      for (auto e : p) bits[e] = true;
      std::set<std::vector<bool>> next = unions;
      next.insert(bits);
      for (const auto& u : unions) {
        std::vector<bool> merged = u;
        for (std::size_t i = 0; i < m; ++i) merged[i] = merged[i] || bits[i];
        next.insert(merged);
      }
      unions = std::move(next);
    }
    std::set<std::vector<bool>> combined;
    for (const auto& a : partial) {
      for (const auto& b : unions) {
        std::vector<bool> merged = a;
        for (std::size_t i = 0; i < m; ++i) merged[i] = merged[i] || b[i];
        combined.insert(merged);
      }
    }
    partial = std::move(combined);
  }
  return partial;
}

/// |E| - |V| + (#components), vertices counted from edge endpoints.
inline int cycle_rank(const LadderDiagram& d, const std::vector<bool>& bits) {
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> links;
  auto vid = [&](GridPoint p) {
    auto [it, inserted] = id.emplace(std::make_pair(p.a, p.b), static_cast<int>(id.size()));
    return it->second;
  };
  int edges = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    ++edges;
    const GridEdge& e = d.edges()[i];
    links.emplace_back(vid(e.tail()), vid(e.head));
  }
  std::vector<int> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int components = static_cast<int>(id.size());
  for (auto [u, v] : links) {
    const int ru = find(u);
    const int rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      --components;
    }
  }
  return edges - static_cast<int>(id.size()) + components;
}

} // namespace gcface::testing

#endif
