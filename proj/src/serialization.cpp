#include "gcface/serialization.hpp"

#include <stdexcept>

namespace gcface {

using nlohmann::json;

namespace {

void require_format(const json& j, const char* expected) {
  if (!j.is_object() || !j.contains("format") || j.at("format") != expected) {
    throw std::invalid_argument(std::string("expected a record with format ") + expected);
  }
}

json counts_json(const std::vector<std::uint64_t>& counts) {
  json out = json::array();
  for (auto c : counts) out.push_back(c);
  return out;
}

json tpoly_json(const TPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

} // namespace

json composition_json(const Composition& k) { return json(k.parts()); }

Composition composition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("composition must be an array");
  return Composition(j.get<std::vector<int>>());
}

json face_record(const DiagramFace& f, bool with_decomposition) {
  json j;
  j["format"] = kFaceFormat;
  j["composition"] = composition_json(f.diagram().composition());
  j["edge_count"] = f.diagram().edge_count();
  j["bits"] = f.to_hex();
  j["dim"] = f.dimension();
  if (with_decomposition && !f.diagram().is_degenerate()) {
    const FaceDecomposition parts = decompose_face(f);
    j["word"] = parts.word.to_string();
    j["child"] = {{"composition", composition_json(parts.child.diagram().composition())},
                  {"bits", parts.child.to_hex()},
                  {"dim", parts.child.dimension()}};
  }
  return j;
}

DiagramFace face_from_record(const json& j) {
  require_format(j, kFaceFormat);
  const DiagramPtr d = diagram_for(composition_from_json(j.at("composition")));
  if (j.at("edge_count").get<std::size_t>() != d->edge_count()) {
    throw std::invalid_argument("edge_count does not match the composition's diagram");
  }
  DiagramFace f(d, EdgeSet::from_hex(d->edge_count(), j.at("bits").get<std::string>()));
  if (j.contains("dim") && j.at("dim").get<int>() != f.dimension()) {
    throw std::invalid_argument("recorded dimension does not match the face");
  }
  return f;
}

json face_list_record(const DiagramPtr& diagram, const std::vector<DiagramFace>& faces, bool with_decomposition) {
  json j;
  j["format"] = kFaceListFormat;
  j["composition"] = composition_json(diagram->composition());
  j["edge_count"] = diagram->edge_count();
  j["face_count"] = faces.size();
  json list = json::array();
  for (const auto& f : faces) {
    json item = face_record(f, with_decomposition);
    item.erase("format");
    item.erase("composition");
    item.erase("edge_count");
    list.push_back(std::move(item));
  }
  j["faces"] = std::move(list);
  return j;
}

std::vector<DiagramFace> faces_from_list_record(const json& j) {
  require_format(j, kFaceListFormat);
  std::vector<DiagramFace> out;
  for (const auto& item : j.at("faces")) {
    json full = item;
    full["format"] = kFaceFormat;
    full["composition"] = j.at("composition");
    full["edge_count"] = j.at("edge_count");
    out.push_back(face_from_record(full));
  }
  return out;
}

json fvector_record(const Composition& k, const FPolynomial& f) {
  json coeffs = json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(c.get_str());
  return {{"format", kFVectorFormat}, {"composition", composition_json(k)}, {"f_vector", std::move(coeffs)}};
}

json fvector_table(const std::vector<Composition>& compositions) {
  json records = json::array();
  for (const auto& k : compositions) {
    json r = fvector_record(k, f_polynomial(k));
    r.erase("format");
    records.push_back(std::move(r));
  }
  return {{"format", kFVectorTableFormat}, {"records", std::move(records)}};
}

FPolynomial fpolynomial_from_record(const json& j) {
  if (j.contains("format")) require_format(j, kFVectorFormat);
  std::vector<mpz_class> coeffs;
  for (const auto& c : j.at("f_vector")) coeffs.emplace_back(c.get<std::string>());
  return FPolynomial(std::move(coeffs));
}

json pde_report_record(const PdeReport& r) {
  json residual = json::array();
  for (const auto& term : r.residual) {
    residual.push_back({{"exponent", term.exponent}, {"coefficient", tpoly_json(term.coefficient)}});
  }
  return {{"format", kPdeReportFormat},
          {"identity", r.identity},
          {"s", r.s},
          {"degree", r.truncation_degree},
          {"validity_degree", r.validity_degree},
          {"checked_monomials", r.checked_monomials},
          {"residual_terms", r.residual.size()},
          {"residual", std::move(residual)},
          {"passed", r.passed()}};
}

json iso_report_record(const IsomorphismReport& r) {
  json j = {{"format", kIsoReportFormat},
            {"spectrum", r.spectrum},
            {"composition", composition_json(Composition::parse(r.composition))},
            {"polytope_faces", r.polytope_faces},
            {"diagram_faces", r.diagram_faces},
            {"polytope_counts", counts_json(r.polytope_counts)},
            {"diagram_counts", counts_json(r.diagram_counts)},
            {"bijection", r.bijection},
            {"order_preserving", r.order_preserving},
            {"dimension_preserving", r.dimension_preserving},
            {"round_trips", r.round_trips},
            {"empty_to_bottom", r.empty_to_bottom},
            {"passed", r.passed()}};
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return j;
}

json identity_report_record(const IdentityReport& r) {
  json j = {{"format", kIdentityReportFormat}, {"name", r.name}, {"cases", r.cases}, {"passed", r.passed()}};
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return j;
}

} // namespace gcface
