#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gcface/face_correspondence.hpp"
#include "gcface/face_enumeration.hpp"
#include "gcface/gc_polytope.hpp"
#include "gcface/rational_linalg.hpp"
#include "gcface/spectrum.hpp"
#include "support.hpp"

using namespace gcface;
using gcface::testing::compositions_up_to;

namespace {

// plain rational Gauss-Jordan, as a reference for the fraction-free rank
std::size_t reference_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, int spread) {
  RationalMatrix m(rows, RationalVector(cols));
  for (auto& row : m) {
    for (auto& v : row) v = mpq_class(testing::uniform(-spread, spread), testing::uniform(1, 4));
  }
  // plant dependent rows now and then
  if (rows >= 3 && testing::uniform(0, 1) == 0) {
    for (std::size_t j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] * mpq_class(2, 3) - m[1][j];
  }
  for (auto& row : m) {
    for (auto& v : row) v.canonicalize();
  }
  return m;
}

Spectrum spectrum(std::initializer_list<int> values) {
  std::vector<mpq_class> v;
  for (int x : values) v.emplace_back(x);
  return Spectrum(v);
}

std::vector<std::uint64_t> nonempty_counts(const std::vector<PolytopeFace>& faces) {
  std::vector<std::uint64_t> out;
  for (const auto& f : faces) {
    if (f.empty()) continue;
    const auto d = static_cast<std::size_t>(f.dim);
    if (out.size() <= d) out.resize(d + 1);
    ++out[d];
  }
  return out;
}

} // namespace

TEST_CASE("exact linear algebra") {
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{mpq_class(1, 2), 1}, {1, mpq_class(1, 3)}}) == 2);
  CHECK_FALSE(solve_square({{1, 2}, {2, 4}}, {1, 1}).has_value());
  const auto x = solve_square({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == mpq_class(4, 5));
  CHECK((*x)[1] == mpq_class(7, 5));

  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(1, 6));
    const auto cols = static_cast<std::size_t>(testing::uniform(1, 6));
    const RationalMatrix m = random_matrix(rows, cols, 5);
    CHECK(matrix_rank(m) == reference_rank(m));

    const RationalMatrix a = random_matrix(cols, cols, 7);
    const RationalVector b = random_matrix(1, cols, 9).front();
    const auto sol = solve_square(a, b);
    CHECK(sol.has_value() == (reference_rank(a) == cols));
    if (sol) {
      for (std::size_t i = 0; i < cols; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * (*sol)[j];
        CHECK(acc == b[i]);
      }
    }
  }
}

TEST_CASE("spectra") {
  const Spectrum s = Spectrum::parse("3/2, 3/2, 0");
  CHECK(s.n() == 3);
  CHECK(s[1] == mpq_class(3, 2));
  CHECK(s.composition() == Composition{2, 1});
  CHECK(s.to_string() == "3/2,3/2,0");
  CHECK_THROWS_AS(Spectrum::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum::parse("1/0"), std::invalid_argument);
  for (const auto& k : compositions_up_to(6)) {
    CHECK(Spectrum::with_blocks(k, 0).composition() == k);
    CHECK(Spectrum::with_blocks(k, 1).composition() == k);
    CHECK(Spectrum::with_blocks(k, 0).values() != Spectrum::with_blocks(k, 1).values());
  }
}

TEST_CASE("inequality systems") {
  const GCSystem sys(spectrum({2, 1, 0}));
  CHECK(sys.dimension() == 3);
  CHECK(sys.constraints().size() == 6);
  CHECK(sys.constraint_index(ConstraintKind::up, 1, 1) == 0);
  CHECK(sys.constraint_index(ConstraintKind::down, 1, 1) == 1);
  const RationalVector mid{1, mpq_class(3, 2), mpq_class(1, 2)};
  CHECK(sys.entry(mid, 1, 3) == 2);
  CHECK(sys.entry(mid, 3, 1) == 0);
  CHECK(sys.is_feasible(mid));
  CHECK_FALSE(sys.is_feasible({3, 0, 0}));

  const GCSystem flat(spectrum({5, 5, 5}));
  CHECK(flat.is_feasible({5, 5, 5}));
  CHECK_FALSE(flat.is_feasible({5, 5, 4}));
}

TEST_CASE("oracle face lattices") {
  SUBCASE("(2,1,0)") {
    const auto faces = face_lattice(GCSystem(spectrum({2, 1, 0})));
    CHECK(nonempty_counts(faces) == std::vector<std::uint64_t>{7, 11, 6, 1});
    CHECK(std::count_if(faces.begin(), faces.end(), [](const PolytopeFace& f) { return f.empty(); }) == 1);
  }
  SUBCASE("triangle") {
    const GCPolytope p(GCSystem(spectrum({1, 1, 0})));
    CHECK(p.vertices().size() == 3);
    CHECK(nonempty_counts(p.face_lattice()) == std::vector<std::uint64_t>{3, 3, 1});
    for (const auto& v : p.vertices()) CHECK(p.system().entry(v, 1, 2) == 1);
  }
  SUBCASE("point") {
    const auto faces = face_lattice(GCSystem(spectrum({4, 4, 4, 4})));
    CHECK(nonempty_counts(faces) == std::vector<std::uint64_t>{1});
    CHECK(faces.size() == 2);
  }
  SUBCASE("dimension of the polytope") {
    for (const auto& k : compositions_up_to(4)) {
      const GCPolytope p(GCSystem(Spectrum::with_blocks(k, 1)));
      BitVector all(p.vertices().size());
      for (std::size_t i = 0; i < p.vertices().size(); ++i) all.set(i);
      CHECK(p.affine_dimension(all) == k.top_dimension());
    }
  }
  CHECK_THROWS_AS(GCPolytope(GCSystem(spectrum({4, 3, 2, 1, 0}))), std::length_error);
}

TEST_CASE("phi and psi at (2,1,0)") {
  const GCSystem sys(spectrum({2, 1, 0}));
  const GCPolytope p(sys);
  const DiagramPtr d = diagram_for(Composition{1, 1, 1});
  const auto lattice = p.face_lattice();
  const PolytopeFace& whole = lattice.back();
  REQUIRE(whole.dim == 3);
  const FaceOrBottom top = phi(sys, whole, d);
  REQUIRE(top.has_value());
  CHECK(top->edges() == d->full_edge_set());
  CHECK_FALSE(phi(sys, lattice.front(), d).has_value());

  std::set<EdgeSet> vertex_images;
  for (const auto& f : lattice) {
    if (f.dim == 0) vertex_images.insert(phi(sys, f, d)->edges());
  }
  std::set<EdgeSet> vertex_faces;
  for (const auto& g : enumerate_faces(d)) {
    if (g.dimension() == 0) vertex_faces.insert(g.edges());
  }
  CHECK(vertex_images == vertex_faces);

  const auto faces = enumerate_faces(d);
  CHECK(psi(p, faces.back()).vertices == whole.vertices);
  for (const auto& g : faces) {
    const PolytopeFace f = psi(p, g);
    CHECK(f.dim == g.dimension());
    CHECK(phi(sys, f, d) == g);
    if (g.dimension() == 0) {
      // a vertex face's averaging point is that vertex
      REQUIRE(f.vertices.count() == 1);
      CHECK(p.vertices()[f.vertices.indices().front()] == representative_point(g, sys));
    }
  }
  CHECK_THROWS_AS(phi(sys, whole, diagram_for(Composition{2, 1})), std::invalid_argument);
}

TEST_CASE("point polytope maps to the single-part diagram") {
  const GCSystem sys(spectrum({3, 3, 3}));
  const GCPolytope p(sys);
  const DiagramPtr d = diagram_for(Composition{3});
  const auto lattice = p.face_lattice();
  REQUIRE(lattice.size() == 2);
  const FaceOrBottom image = phi(sys, lattice.back(), d);
  REQUIRE(image.has_value());
  CHECK(image->edges() == d->full_edge_set());
  const IsomorphismReport r = verify_isomorphism(sys.spectrum());
  CHECK(r.passed());
  CHECK(r.diagram_faces == 1);
}

TEST_CASE("representative points") {
  const DiagramPtr d11 = diagram_for(Composition{1, 1});
  const RationalVector x = representative_point(DiagramFace(d11, d11->full_edge_set()), spectrum({1, 0}));
  CHECK(x == RationalVector{mpq_class(1, 2)});

  const Spectrum lambda = spectrum({2, 1, 0});
  const GCSystem sys(lambda);
  const DiagramPtr d = diagram_for(Composition{1, 1, 1});
  const RationalVector centre = representative_point(DiagramFace(d, d->full_edge_set()), sys);
  for (std::size_t c = 0; c < sys.constraints().size(); ++c) CHECK(sys.slack(c, centre) > 0);

  for (const auto& f : enumerate_faces(d)) {
    if (f.dimension() != 0) continue;
    for (const auto& v : representative_point(f, sys)) {
      CHECK(std::find(lambda.values().begin(), lambda.values().end(), v) != lambda.values().end());
    }
    CHECK(strictness_violation(f, sys, centre).has_value());
  }

  for (const auto& k : compositions_up_to(4)) {
    for (int variant = 0; variant < 2; ++variant) {
      const GCSystem s(Spectrum::with_blocks(k, variant));
      for (const auto& f : enumerate_faces(k)) {
        const RationalVector p = representative_point(f, s);
        CHECK(s.is_feasible(p));
        const auto bad = strictness_violation(f, s, p);
        CHECK_MESSAGE(!bad, "k = " << k.to_string() << ": " << bad.value_or(""));
      }
    }
  }
}

TEST_CASE("isomorphism for every composition up to n = 4") {
  const IsomorphismReport r = verify_isomorphism(spectrum({2, 1, 0}));
  CHECK(r.passed());
  CHECK(r.polytope_faces == 25);
  CHECK(r.diagram_faces == 25);
  const IsomorphismReport tri = verify_isomorphism(spectrum({1, 1, 0}));
  CHECK(tri.passed());
  CHECK(tri.diagram_faces == 7);

  for (const auto& k : compositions_up_to(4)) {
    const IsomorphismReport a = verify_isomorphism(Spectrum::with_blocks(k, 0));
    const IsomorphismReport b = verify_isomorphism(Spectrum::with_blocks(k, 1));
    CHECK_MESSAGE(a.passed(), a.counterexample.value_or(k.to_string()));
    CHECK_MESSAGE(b.passed(), b.counterexample.value_or(k.to_string()));
    CHECK(a.polytope_counts == b.polytope_counts);
    CHECK(a.polytope_counts == a.diagram_counts);
  }
  CHECK_THROWS_AS(verify_isomorphism(spectrum({4, 3, 2, 1, 0})), std::length_error);
}
