#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "gcface/assignment.hpp"
#include "gcface/diagram_face.hpp"
#include "gcface/f_polynomial.hpp"
#include "gcface/face_enumeration.hpp"
#include "gcface/word_transforms.hpp"
#include "support.hpp"

using namespace gcface;
using gcface::testing::compositions_up_to;

namespace {

EdgeSet edges_of(const LadderDiagram& d, std::initializer_list<GridEdge> edges) {
  EdgeSet out = d.empty_edge_set();
  for (const auto& e : edges) out.set(d.edge_index(e).value());
  return out;
}

std::vector<bool> to_bools(const EdgeSet& s) {
  std::vector<bool> out(s.width());
  for (std::size_t i = 0; i < s.width(); ++i) out[i] = s.test(i);
  return out;
}

std::map<int, int> dim_histogram(const std::vector<DiagramFace>& faces) {
  std::map<int, int> h;
  for (const auto& f : faces) ++h[f.dimension()];
  return h;
}

// vertex faces below f
std::vector<std::size_t> atoms_below(const std::vector<DiagramFace>& faces, const DiagramFace& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dimension() == 0 && faces[i].edges().is_subset_of(f.edges())) out.push_back(i);
  }
  return out;
}

} // namespace

TEST_CASE("bit vectors") {
  BitVector v(70);
  v.set(0);
  v.set(69);
  CHECK(v.count() == 2);
  CHECK(v.indices() == std::vector<std::size_t>{0, 69});
  CHECK(v.to_hex() == "200000000000000001");
  CHECK(BitVector::from_hex(70, v.to_hex()) == v);
  CHECK(BitVector::from_mask(8, 0x0f) < BitVector::from_mask(8, 0x10));
  CHECK(BitVector::from_mask(4, 0xf) < BitVector::from_mask(8, 0x0));
  CHECK_THROWS(BitVector::from_hex(4, "1f"));

  for (int trial = 0; trial < 200; ++trial) {
    const auto width = static_cast<std::size_t>(testing::uniform(1, 64));
    const std::uint64_t mask = width == 64 ? ~0ULL : (1ULL << width) - 1;
    const std::uint64_t a = testing::rng()() & mask;
    const std::uint64_t b = testing::rng()() & mask;
    const BitVector va = BitVector::from_mask(width, a);
    const BitVector vb = BitVector::from_mask(width, b);
    CHECK((va | vb) == BitVector::from_mask(width, a | b));
    CHECK((va & vb) == BitVector::from_mask(width, a & b));
    CHECK(BitVector(va).subtract(vb) == BitVector::from_mask(width, a & ~b));
    CHECK((va < vb) == (a < b));
    CHECK(va.is_subset_of(vb) == ((a & ~b) == 0));
    CHECK(BitVector::from_hex(width, va.to_hex()) == va);
  }
}

TEST_CASE("compositions") {
  CHECK(Composition::parse("2, 0,1").parts() == std::vector<int>{2, 0, 1});
  CHECK(Composition::parse("2,0,1").reduced() == Composition{2, 1});
  CHECK(Composition::parse("").empty());
  CHECK_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
  CHECK(Composition{1, 2, 3}.total() == 6);
  CHECK(Composition{1, 2, 3}.top_dimension() == 11);
  CHECK(Composition{2, 0, 1}.total() == Composition{2, 0, 1}.reduced().total());
  for (int n = 1; n <= 8; ++n) CHECK(compositions_of(n).size() == (1u << (n - 1)));
  CHECK(compositions_of(0).size() == 1);
}

TEST_CASE("ladder diagrams") {
  SUBCASE("(1,1,1)") {
    const LadderDiagram d(Composition{1, 1, 1});
    CHECK(d.terminals() == std::vector<GridPoint>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    CHECK(d.vertex_count() == 10);
    CHECK(d.edge_count() == 12);
    CHECK(d.dimension() == 3);
  }
  SUBCASE("(2,1)") {
    const LadderDiagram d(Composition{2, 1});
    CHECK(d.terminals() == std::vector<GridPoint>{{0, 3}, {2, 1}, {3, 0}});
    CHECK(d.vertex_count() == 9);
    CHECK(d.edge_count() == 10);
  }
  SUBCASE("zeros are dropped") {
    const LadderDiagram a(Composition{2, 0, 1});
    const LadderDiagram b(Composition{2, 1});
    CHECK(a.vertices() == b.vertices());
    CHECK(a.edges() == b.edges());
    CHECK(diagram_for(Composition{2, 0, 1}) == diagram_for(Composition{2, 1}));
  }
  SUBCASE("degenerate") {
    const LadderDiagram d(Composition{0, 0});
    CHECK(d.is_degenerate());
    CHECK(d.vertex_count() == 1);
    CHECK(d.edge_count() == 0);
  }
  SUBCASE("vertex set is the down-closure of the terminals") {
    for (const auto& k : compositions_up_to(6)) {
      const LadderDiagram d(k);
      std::size_t expected = 0;
      for (int a = 0; a <= d.n(); ++a) {
        for (int b = 0; b <= d.n(); ++b) {
          const bool dominated = std::any_of(d.terminals().begin(), d.terminals().end(),
                                             [&](GridPoint t) { return a <= t.a && b <= t.b; });
          CHECK(d.contains({a, b}) == dominated);
          expected += dominated;
        }
      }
      CHECK(d.vertex_count() == expected);
      for (std::size_t e = 0; e < d.edge_count(); ++e) {
        const GridPoint t = d.vertices()[d.edge_tail(e)];
        const GridPoint h = d.vertices()[d.edge_head(e)];
        CHECK((h.a - t.a) + (h.b - t.b) == 1);
        CHECK(d.edges()[e].tail() == t);
        if (e > 0) {
          const GridEdge& prev = d.edges()[e - 1];
          const GridEdge& cur = d.edges()[e];
          CHECK((prev.head < cur.head || (prev.head == cur.head && prev.kind == EdgeKind::horizontal)));
        }
      }
    }
  }
}

TEST_CASE("face predicate") {
  const DiagramPtr d111 = diagram_for(Composition{1, 1, 1});
  CHECK(is_face(*d111, d111->full_edge_set()));

  const DiagramPtr d11 = diagram_for(Composition{1, 1});
  const EdgeSet boundary = edges_of(*d11, {GridEdge::vertical(0, 1), GridEdge::vertical(0, 2),
                                          GridEdge::horizontal(1, 0), GridEdge::horizontal(2, 0)});
  CHECK_FALSE(is_face(*d11, boundary));
  CHECK_THROWS_AS(DiagramFace(d11, boundary), std::invalid_argument);

  std::size_t accepted = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << d111->edge_count()); ++mask) {
    accepted += is_face_mask(*d111, mask);
  }
  CHECK(accepted == 25);
}

TEST_CASE("local patterns agree with reachability on every subset") {
  for (const auto& k : compositions_up_to(4)) {
    const DiagramPtr d = diagram_for(k);
    REQUIRE(d->edge_count() <= 20);
    for (std::uint64_t mask = 0; mask < (1ULL << d->edge_count()); ++mask) {
      const EdgeSet s = EdgeSet::from_mask(d->edge_count(), mask);
      const bool local = satisfies_local_patterns(*d, s);
      if (local != is_face_mask(*d, mask)) {
        FAIL("k = " << k.to_string() << ", subset " << s.to_hex());
      }
    }
  }
}

TEST_CASE("face dimensions") {
  const DiagramPtr d111 = diagram_for(Composition{1, 1, 1});
  CHECK(DiagramFace(d111, d111->full_edge_set()).dimension() == 3);
  const DiagramPtr d21 = diagram_for(Composition{2, 1});
  CHECK(DiagramFace(d21, d21->full_edge_set()).dimension() == 2);
  CHECK(testing::cycle_rank(*d21, to_bools(d21->full_edge_set())) == 2);

  // one path per terminal, chosen to stay tree-shaped: go up first, then right
  const DiagramPtr d = diagram_for(Composition{2, 1, 2});
  EdgeSet tree = d->empty_edge_set();
  for (const GridPoint& t : d->terminals()) {
    for (int b = 1; b <= t.b; ++b) tree.set(d->edge_index(GridEdge::vertical(0, b)).value());
    for (int a = 1; a <= t.a; ++a) tree.set(d->edge_index(GridEdge::horizontal(a, t.b)).value());
  }
  CHECK(DiagramFace(d, tree).dimension() == 0);
}

TEST_CASE("faces of small diagrams") {
  const auto f111 = enumerate_faces(Composition{1, 1, 1});
  CHECK(f111.size() == 25);
  CHECK(dim_histogram(f111) == std::map<int, int>{{0, 7}, {1, 11}, {2, 6}, {3, 1}});

  const auto f21 = enumerate_faces(Composition{2, 1});
  CHECK(f21.size() == 7);
  CHECK(dim_histogram(f21) == std::map<int, int>{{0, 3}, {1, 3}, {2, 1}});

  const auto f11 = brute_force_faces(diagram_for(Composition{1, 1}));
  CHECK(dim_histogram(f11) == std::map<int, int>{{0, 2}, {1, 1}});

  for (int m = 0; m <= 6; ++m) {
    const auto single = enumerate_faces(Composition{m});
    REQUIRE(single.size() == 1);
    CHECK(single.front().edges() == single.front().diagram().full_edge_set());
  }
  CHECK(brute_force_faces(diagram_for(Composition{5})).size() == 1);
  CHECK(brute_force_faces(diagram_for(Composition{1, 1, 1})) == f111);
  CHECK_THROWS_AS(brute_force_faces(diagram_for(Composition{1, 1, 1, 1, 1}), 22), std::length_error);
}

TEST_CASE("enumeration matches an independent path-union oracle") {
  for (const auto& k : compositions_up_to(4)) {
    const DiagramPtr d = diagram_for(k);
    const auto oracle = testing::path_union_faces(*d);
    const auto faces = enumerate_faces(d);
    std::set<std::vector<bool>> got;
    for (const auto& f : faces) {
      got.insert(to_bools(f.edges()));
      CHECK(f.dimension() == testing::cycle_rank(*d, to_bools(f.edges())));
      CHECK(component_count(*d, f.edges()) == (d->is_degenerate() ? 0 : 1));
      CHECK(satisfies_local_patterns(*d, f.edges()));
    }
    CHECK_MESSAGE(got == oracle, "k = " << k.to_string());
    CHECK(got.size() == faces.size());
    CHECK(std::is_sorted(faces.begin(), faces.end()));
  }
}

TEST_CASE("top face, Euler relation and transposition") {
  for (const auto& k : compositions_up_to(5)) {
    const DiagramPtr d = diagram_for(k);
    const auto faces = enumerate_faces(d);
    const long long top = d->dimension();
    int at_top = 0;
    long long euler = 0;
    for (const auto& f : faces) {
      CHECK(f.dimension() <= top);
      if (f.dimension() == top) {
        ++at_top;
        CHECK(f.edges() == d->full_edge_set());
      }
      euler += f.dimension() % 2 == 0 ? 1 : -1;
    }
    CHECK(at_top == 1);
    CHECK(euler == 1);
    const int n = k.total();
    long long squares = 0;
    for (int p : k.parts()) squares += static_cast<long long>(p) * p;
    CHECK(2 * top == n * n - squares);

    const auto mirrored = enumerate_faces(k.reversed());
    std::vector<DiagramFace> images;
    for (const auto& f : faces) {
      const DiagramFace g = transpose(f);
      CHECK(g.dimension() == f.dimension());
      CHECK(transpose(g) == f);
      images.push_back(g);
    }
    std::sort(images.begin(), images.end());
    CHECK(images == mirrored);
  }
}

TEST_CASE("join and meet") {
  const DiagramPtr d11 = diagram_for(Composition{1, 1});
  const auto f11 = enumerate_faces(d11);
  std::vector<DiagramFace> points;
  for (const auto& f : f11) {
    if (f.dimension() == 0) points.push_back(f);
  }
  REQUIRE(points.size() == 2);
  CHECK(join(points[0], points[1]).edges() == d11->full_edge_set());
  CHECK_FALSE(meet(points[0], points[1]).has_value());
  CHECK(join(points[0], points[0]) == points[0]);

  const DiagramPtr d = diagram_for(Composition{1, 1, 1});
  const auto faces = enumerate_faces(d);
  const DiagramFace full(d, d->full_edge_set());
  for (const auto& f : faces) {
    CHECK(meet(f, full) == f);
    CHECK(join(f, f) == f);
  }
  CHECK_THROWS_AS(join(points[0], full), std::invalid_argument);
}

TEST_CASE("faces are determined by their vertex faces") {
  const auto faces = enumerate_faces(Composition{1, 1, 1});
  // f_J is the union of its vertex faces, and f_I <= f_J iff I is inside J
  for (const auto& f : faces) {
    const auto atoms = atoms_below(faces, f);
    EdgeSet u = f.diagram().empty_edge_set();
    for (auto a : atoms) u |= faces[a].edges();
    CHECK(u == f.edges());
  }
  for (const auto& f : faces) {
    for (const auto& g : faces) {
      const auto a = atoms_below(faces, f);
      const auto b = atoms_below(faces, g);
      CHECK(f.edges().is_subset_of(g.edges()) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
      // the meet has exactly the common vertex faces
      const FaceOrBottom m = meet(f, g);
      std::vector<std::size_t> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty()) {
        CHECK_FALSE(m.has_value());
      } else {
        REQUIRE(m.has_value());
        CHECK(atoms_below(faces, *m) == common);
      }
    }
  }

  // two 2-faces on three vertex faces each, sharing one: their edge
  // intersection is not a face, and the meet is the shared vertex face
  int witnesses = 0;
  for (const auto& f : faces) {
    for (const auto& g : faces) {
      if (f.dimension() != 2 || g.dimension() != 2) continue;
      const auto a = atoms_below(faces, f);
      const auto b = atoms_below(faces, g);
      std::vector<std::size_t> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (a.size() != 3 || b.size() != 3 || common.size() != 1) continue;
      if (is_face(f.diagram(), f.edges() & g.edges())) continue;
      ++witnesses;
      CHECK(meet(f, g) == faces[common.front()]);
    }
  }
  CHECK(witnesses > 0);
}

TEST_CASE("lattice axioms with bottom adjoined") {
  for (const auto& k : compositions_up_to(4)) {
    const auto faces = enumerate_faces(k);
    std::vector<FaceOrBottom> elems{std::nullopt};
    for (const auto& f : faces) elems.emplace_back(f);
    for (const auto& a : elems) {
      CHECK(join(a, a) == a);
      CHECK(meet(a, a) == a);
      for (const auto& b : elems) {
        const FaceOrBottom j = join(a, b);
        const FaceOrBottom m = meet(a, b);
        if (j != join(b, a) || m != meet(b, a) || join(a, m) != a || meet(a, j) != a) {
          FAIL("k = " << k.to_string());
        }
        if (precedes(a, b) != (m == a)) FAIL("order disagrees with meet for k = " << k.to_string());
      }
    }
    for (int trial = 0; trial < 300; ++trial) {
      const auto& a = elems[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(elems.size()) - 1))];
      const auto& b = elems[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(elems.size()) - 1))];
      const auto& c = elems[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(elems.size()) - 1))];
      CHECK(join(join(a, b), c) == join(a, join(b, c)));
      CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
    }
  }
}

TEST_CASE("assignment words") {
  CHECK(AssignmentWord::all(0).size() == 1);
  CHECK(AssignmentWord::all(3).size() == 27);
  CHECK(AssignmentWord::all(2).front().to_string() == "RR");
  CHECK(AssignmentWord::all(2).back().to_string() == "BB");
  const AssignmentWord w = AssignmentWord::parse("RBU");
  CHECK(w.weight() == 1);
  CHECK(w.indicator() == std::vector<int>{0, 1, 0});
  CHECK(w.alpha(4) == 1);
  CHECK(w.beta(0) == 1);
  CHECK_THROWS(AssignmentWord::parse("RX"));

  const DiagramPtr d111 = diagram_for(Composition{1, 1, 1});
  CHECK(assignment_of_face(DiagramFace(d111, d111->full_edge_set())).to_string() == "BB");

  const DiagramPtr d11 = diagram_for(Composition{1, 1});
  const EdgeSet up_right = edges_of(*d11, {GridEdge::vertical(0, 1), GridEdge::vertical(0, 2),
                                          GridEdge::horizontal(1, 1), GridEdge::horizontal(1, 0),
                                          GridEdge::horizontal(2, 0)});
  const EdgeSet right_up = edges_of(*d11, {GridEdge::vertical(0, 1), GridEdge::vertical(0, 2),
                                          GridEdge::horizontal(1, 0), GridEdge::vertical(1, 1),
                                          GridEdge::horizontal(2, 0)});
  CHECK(assignment_of_face(DiagramFace(d11, up_right)).to_string() == "R");
  CHECK(assignment_of_face(DiagramFace(d11, right_up)).to_string() == "U");
}

TEST_CASE("decomposition") {
  const DiagramPtr d11 = diagram_for(Composition{1, 1});
  const FaceDecomposition parts = decompose_face(DiagramFace(d11, d11->full_edge_set()));
  CHECK(parts.word.to_string() == "B");
  CHECK(child_composition(Composition{1, 1}, parts.word) == Composition{0, 1, 0});
  CHECK(parts.child.diagram().composition() == Composition{1});
  CHECK(parts.child.edges() == parts.child.diagram().full_edge_set());

  for (const auto& k : compositions_up_to(5)) {
    const DiagramPtr d = diagram_for(k);
    std::map<std::string, std::vector<mpz_class>> by_word;
    for (const auto& f : enumerate_faces(d)) {
      const FaceDecomposition fd = decompose_face(f);
      CHECK(fd.word.length() == static_cast<std::size_t>(k.length() - 1));
      CHECK(recompose(d, fd.word, fd.child) == f);
      CHECK(f.dimension() == fd.child.dimension() + fd.word.weight());
      auto& counts = by_word[fd.word.to_string()];
      const auto dim = static_cast<std::size_t>(f.dimension());
      if (counts.size() <= dim) counts.resize(dim + 1);
      counts[dim] += 1;
    }
    // regrouping by word reproduces the recursion term by term
    for (const auto& w : AssignmentWord::all(static_cast<std::size_t>(k.length() - 1))) {
      const FPolynomial term = f_polynomial(child_composition(k, w)).shifted(w.weight());
      CHECK(FPolynomial(by_word[w.to_string()]) == term);
    }
  }
}
