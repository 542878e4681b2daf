#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcface/cli.hpp"
#include "gcface/f_polynomial.hpp"
#include "gcface/face_correspondence.hpp"
#include "gcface/face_enumeration.hpp"
#include "gcface/pde_check.hpp"
#include "gcface/serialization.hpp"
#include "gcface/spectrum.hpp"

namespace py = pybind11;
using namespace gcface;

namespace {

py::int_ to_py(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

py::list coefficients(const FPolynomial& f) {
  py::list out;
  for (const auto& c : f.coefficients()) out.append(to_py(c));
  return out;
}

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::list face_dicts(const std::vector<DiagramFace>& faces) {
  py::list out;
  for (const auto& f : faces) {
    py::dict d;
    d["bits"] = f.to_hex();
    d["dim"] = f.dimension();
    py::list edges;
    for (std::size_t e : f.edges().indices()) edges.append(f.diagram().edges()[e].to_string());
    d["edges"] = edges;
    out.append(d);
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_gcface, m) {
  m.doc() = "Ladder-diagram face lattices of Gelfand-Cetlin polytopes";

  m.def("f_vector", [](const std::vector<int>& k) { return coefficients(f_polynomial(Composition(k))); },
        py::arg("k"), "Face counts by dimension, lowest first.");
  m.def("f_polynomial", [](const std::vector<int>& k) { return f_polynomial(Composition(k)).to_string(); },
        py::arg("k"));
  m.def("edge_count", [](const std::vector<int>& k) { return diagram_for(Composition(k))->edge_count(); },
        py::arg("k"));
  m.def("faces", [](const std::vector<int>& k) { return face_dicts(enumerate_faces(Composition(k))); },
        py::arg("k"), "Every face via the terminal-word recursion.");
  m.def(
      "brute_force_faces",
      [](const std::vector<int>& k, std::size_t max_edges) {
        return face_dicts(brute_force_faces(diagram_for(Composition(k)), max_edges));
      },
      py::arg("k"), py::arg("max_edges") = kDefaultBruteForceEdgeBound);
  m.def(
      "verify_isomorphism",
      [](const std::string& lambda, int max_n) {
        return from_json(iso_report_record(verify_isomorphism(Spectrum::parse(lambda), max_n)));
      },
      py::arg("spectrum"), py::arg("max_n") = kDefaultOracleMaxN);
  m.def(
      "verify_main_pde", [](int s, int degree) { return from_json(pde_report_record(verify_main_pde(s, degree))); },
      py::arg("s"), py::arg("degree") = 6);
  m.def(
      "verify_gkt_pde", [](int s, int degree) { return from_json(pde_report_record(verify_gkt_pde(s, degree))); },
      py::arg("s"), py::arg("degree") = 6);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit status, stdout, stderr).");
}
