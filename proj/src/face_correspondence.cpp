#include "gcface/face_correspondence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gcface/face_enumeration.hpp"

namespace gcface {

namespace {

bool has_edge(const DiagramFace& face, const GridEdge& e) { return face.contains(e); }

void require_matching(const GCSystem& system, const LadderDiagram& diagram) {
  if (system.spectrum().composition() != diagram.composition()) {
    throw std::invalid_argument("spectrum block composition (" + system.spectrum().composition().to_string() +
                                ") does not match diagram composition (" + diagram.composition().to_string() + ")");
  }
}

std::vector<std::uint64_t> histogram(const std::vector<int>& dims) {
  std::vector<std::uint64_t> out;
  for (int d : dims) {
    if (d < 0) continue;
    if (out.size() <= static_cast<std::size_t>(d)) out.resize(static_cast<std::size_t>(d) + 1, 0);
    ++out[static_cast<std::size_t>(d)];
  }
  return out;
}

} // namespace

FaceOrBottom phi(const GCSystem& system, const PolytopeFace& face, const DiagramPtr& diagram) {
  require_matching(system, *diagram);
  if (face.empty()) return std::nullopt;
  const int n = system.n();
  EdgeSet edges = diagram->empty_edge_set();
  auto add = [&](const GridEdge& e) {
    const auto idx = diagram->edge_index(e);
    if (!idx) throw std::logic_error("phi produced edge " + e.to_string() + " outside the ladder diagram");
    edges.set(*idx);
  };
  for (int t = 1; t <= n; ++t) {
    add(GridEdge::vertical(0, t));
    add(GridEdge::horizontal(t, 0));
  }
  for (const PatternCell& cell : system.cells()) {
    if (!face.tight_set.test(system.constraint_index(ConstraintKind::up, cell.i, cell.j))) {
      add(GridEdge::horizontal(cell.i, cell.j));
    }
    if (!face.tight_set.test(system.constraint_index(ConstraintKind::down, cell.i, cell.j))) {
      add(GridEdge::vertical(cell.i, cell.j));
    }
  }
  return DiagramFace(diagram, std::move(edges));
}

PolytopeFace psi(const GCPolytope& polytope, const DiagramFace& face) {
  const GCSystem& system = polytope.system();
  require_matching(system, face.diagram());
  BitVector equalities(system.constraints().size());
  for (const PatternCell& cell : system.cells()) {
    if (!has_edge(face, GridEdge::horizontal(cell.i, cell.j))) {
      equalities.set(system.constraint_index(ConstraintKind::up, cell.i, cell.j));
    }
    if (!has_edge(face, GridEdge::vertical(cell.i, cell.j))) {
      equalities.set(system.constraint_index(ConstraintKind::down, cell.i, cell.j));
    }
  }
  return polytope.face_of(polytope.vertices_tight_on(equalities));
}

RationalVector representative_point(const DiagramFace& face, const GCSystem& system) {
  require_matching(system, face.diagram());
  const int n = system.n();
  RationalVector x(system.dimension(), 0);
  // anti-diagonals i + j = n, n-1, ..., 2 depend only on the previous one
  for (int level = n; level >= 2; --level) {
    for (int i = 1; i < level; ++i) {
      const int j = level - i;
      const std::size_t idx = *system.cell_index(i, j);
      const mpq_class above = system.entry(x, i, j + 1);
      const mpq_class right = system.entry(x, i + 1, j);
      const bool h = has_edge(face, GridEdge::horizontal(i, j));
      const bool v = has_edge(face, GridEdge::vertical(i, j));
      if (!h) {
        x[idx] = above;
      } else if (!v) {
        x[idx] = right;
      } else {
        x[idx] = (above + right) / 2;
        x[idx].canonicalize();
      }
    }
  }
  return x;
}

RationalVector representative_point(const DiagramFace& face, const Spectrum& lambda) {
  return representative_point(face, GCSystem(lambda));
}

std::optional<std::string> strictness_violation(const DiagramFace& face, const GCSystem& system,
                                                const RationalVector& point) {
  if (!system.is_feasible(point)) return std::string("point violates the GC inequalities");
  for (const PatternCell& cell : system.cells()) {
    const mpq_class here = system.entry(point, cell.i, cell.j);
    const bool h = has_edge(face, GridEdge::horizontal(cell.i, cell.j));
    const bool v = has_edge(face, GridEdge::vertical(cell.i, cell.j));
    const bool up_strict = here < system.entry(point, cell.i, cell.j + 1);
    const bool down_strict = here > system.entry(point, cell.i + 1, cell.j);
    const std::string at = "(" + std::to_string(cell.i) + "," + std::to_string(cell.j) + ")";
    if (h != up_strict) return "up inequality at " + at + (h ? " is tight but the edge is present" : " is strict but the edge is absent");
    if (v != down_strict) return "down inequality at " + at + (v ? " is tight but the edge is present" : " is strict but the edge is absent");
  }
  return std::nullopt;
}

IsomorphismReport verify_isomorphism(const Spectrum& lambda, int max_n) {
  IsomorphismReport report;
  report.spectrum = lambda.to_string();
  report.composition = lambda.composition().to_string();

  const GCPolytope polytope(GCSystem(lambda), max_n);
  const GCSystem& system = polytope.system();
  const DiagramPtr diagram = diagram_for(lambda.composition());
  const std::vector<PolytopeFace> all_faces = polytope.face_lattice();
  const std::vector<DiagramFace> diagram_faces = enumerate_faces(diagram);

  std::vector<const PolytopeFace*> faces;
  for (const auto& f : all_faces) {
    if (f.empty()) {
      report.empty_to_bottom = !phi(system, f, diagram).has_value();
    } else {
      faces.push_back(&f);
    }
  }
  report.polytope_faces = faces.size();
  report.diagram_faces = diagram_faces.size();

  std::vector<int> poly_dims;
  for (const auto* f : faces) poly_dims.push_back(f->dim);
  report.polytope_counts = histogram(poly_dims);
  report.diagram_counts = dimension_counts(diagram_faces);

  auto fail = [&](std::string what) {
    if (!report.counterexample) report.counterexample = std::move(what);
  };

  std::vector<DiagramFace> images;
  images.reserve(faces.size());
  try {
    for (const auto* f : faces) {
      FaceOrBottom image = phi(system, *f, diagram);
      if (!image) throw std::logic_error("nonempty face mapped to bottom");
      images.push_back(std::move(*image));
    }
  } catch (const std::exception& e) {
    fail(std::string("phi failed: ") + e.what());
    return report;
  }

  // (a) bijection onto the enumerated faces
  {
    std::vector<EdgeSet> image_sets;
    for (const auto& g : images) image_sets.push_back(g.edges());
    std::sort(image_sets.begin(), image_sets.end());
    const bool distinct = std::adjacent_find(image_sets.begin(), image_sets.end()) == image_sets.end();
    std::vector<EdgeSet> expected;
    for (const auto& g : diagram_faces) expected.push_back(g.edges());
    report.bijection = distinct && image_sets == expected;
    if (!report.bijection) {
      fail("phi is not a bijection: " + std::to_string(image_sets.size()) + " images vs " +
           std::to_string(expected.size()) + " diagram faces" + (distinct ? "" : " (images collide)"));
    }
  }

  // (c) dimensions
  report.dimension_preserving = true;
  for (std::size_t a = 0; a < faces.size(); ++a) {
    if (faces[a]->dim != images[a].dimension()) {
      report.dimension_preserving = false;
      fail("dimension mismatch at face " + images[a].to_hex() + ": polytope " + std::to_string(faces[a]->dim) +
           ", diagram " + std::to_string(images[a].dimension()));
      break;
    }
  }

  // (b) two-sided order preservation over all pairs
  report.order_preserving = true;
  for (std::size_t a = 0; a < faces.size() && report.order_preserving; ++a) {
    for (std::size_t b = 0; b < faces.size(); ++b) {
      const bool poly = faces[a]->is_subface_of(*faces[b]);
      const bool diag = images[a].edges().is_subset_of(images[b].edges());
      if (poly != diag) {
        report.order_preserving = false;
        fail("inclusion differs for diagram faces " + images[a].to_hex() + " and " + images[b].to_hex());
        break;
      }
    }
  }

  // (d) psi o phi and phi o psi
  report.round_trips = true;
  try {
    for (std::size_t a = 0; a < faces.size(); ++a) {
      if (psi(polytope, images[a]).vertices != faces[a]->vertices) {
        report.round_trips = false;
        fail("psi(phi(F)) != F for diagram face " + images[a].to_hex());
        break;
      }
    }
    for (const auto& g : diagram_faces) {
      const PolytopeFace back = psi(polytope, g);
      const FaceOrBottom again = phi(system, back, diagram);
      if (!again || again->edges() != g.edges()) {
        report.round_trips = false;
        fail("phi(psi(g)) != g for diagram face " + g.to_hex());
        break;
      }
    }
  } catch (const std::exception& e) {
    report.round_trips = false;
    fail(std::string("round trip failed: ") + e.what());
  }
  return report;
}

} // namespace gcface
