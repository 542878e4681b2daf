#include "gcface/gc_polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gcface {

namespace {

/// Calls `visit` with each size-`r` subset of [0, m) in lexicographic order.
template <typename Visit>
void for_each_combination(std::size_t m, std::size_t r, Visit visit) {
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  if (r > m) return;
  while (true) {
    visit(pick);
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == m - r + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

} // namespace

GCPolytope::GCPolytope(GCSystem system, int max_n) : system_(std::move(system)) {
  if (system_.n() > max_n) {
    throw std::length_error("polyhedral oracle refused: n = " + std::to_string(system_.n()) + " exceeds bound " +
                            std::to_string(max_n));
  }
  const std::size_t d = system_.dimension();
  const auto& constraints = system_.constraints();
  std::set<RationalVector> found;
  for_each_combination(constraints.size(), d, [&](const std::vector<std::size_t>& pick) {
    RationalMatrix a;
    RationalVector b;
    a.reserve(d);
    for (std::size_t c : pick) {
      a.push_back(constraints[c].coefficients);
      b.push_back(-constraints[c].constant);
    }
    auto x = solve_square(a, b);
    if (x && system_.is_feasible(*x)) found.insert(std::move(*x));
  });
  vertices_.assign(found.begin(), found.end());
  for (const auto& v : vertices_) {
    BitVector tight(constraints.size());
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      if (system_.is_tight(c, v)) tight.set(c);
    }
    tightness_.push_back(std::move(tight));
  }
}

BitVector GCPolytope::vertices_tight_on(const BitVector& constraints) const {
  BitVector out(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (constraints.is_subset_of(tightness_[v])) out.set(v);
  }
  return out;
}

int GCPolytope::affine_dimension(const BitVector& vertex_set) const {
  const auto members = vertex_set.indices();
  if (members.empty()) return -1;
  RationalMatrix differences;
  const RationalVector& base = vertices_[members.front()];
  for (std::size_t k = 1; k < members.size(); ++k) {
    RationalVector row = vertices_[members[k]];
    for (std::size_t c = 0; c < row.size(); ++c) row[c] -= base[c];
    differences.push_back(std::move(row));
  }
  if (differences.empty() || base.empty()) return 0;
  return static_cast<int>(matrix_rank(differences));
}

PolytopeFace GCPolytope::face_of(const BitVector& vertex_set) const {
  const std::size_t m = system_.constraints().size();
  PolytopeFace face;
  if (vertex_set.none()) {
    face.vertices = BitVector(vertices_.size());
    face.tight_set = BitVector(m);
    for (std::size_t c = 0; c < m; ++c) face.tight_set.set(c);
    return face;
  }
  BitVector common(m);
  for (std::size_t c = 0; c < m; ++c) common.set(c);
  for (std::size_t v : vertex_set.indices()) common &= tightness_[v];
  face.vertices = vertices_tight_on(common);
  face.tight_set = std::move(common);
  face.dim = affine_dimension(face.vertices);

  RationalVector centroid(system_.dimension(), 0);
  const auto members = face.vertices.indices();
  for (std::size_t v : members) {
    for (std::size_t c = 0; c < centroid.size(); ++c) centroid[c] += vertices_[v][c];
  }
  for (auto& c : centroid) {
    c /= static_cast<long>(members.size());
    c.canonicalize();
  }
  face.representative = std::move(centroid);
  return face;
}

std::vector<PolytopeFace> GCPolytope::face_lattice() const {
  std::vector<PolytopeFace> faces;
  std::set<BitVector> seen;
  std::deque<BitVector> queue;
  auto visit = [&](const BitVector& vertex_set) {
    PolytopeFace f = face_of(vertex_set);
    if (seen.insert(f.vertices).second) {
      queue.push_back(f.vertices);
      faces.push_back(std::move(f));
    }
  };
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    BitVector single(vertices_.size());
    single.set(v);
    visit(single);
  }
  while (!queue.empty()) {
    const BitVector current = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (current.test(v)) continue;
      BitVector grown = current;
      grown.set(v);
      visit(grown);
    }
  }
  faces.push_back(face_of(BitVector(vertices_.size())));
  std::sort(faces.begin(), faces.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return faces;
}

std::vector<PolytopeFace> face_lattice(const GCSystem& system, int max_n) {
  return GCPolytope(system, max_n).face_lattice();
}

} // namespace gcface
