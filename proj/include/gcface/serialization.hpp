#ifndef GCFACE_SERIALIZATION_HPP
#define GCFACE_SERIALIZATION_HPP

#include <vector>

#include <json.hpp>

#include "gcface/diagram_face.hpp"
#include "gcface/f_polynomial.hpp"
#include "gcface/face_correspondence.hpp"
#include "gcface/face_enumeration.hpp"
#include "gcface/lemma_checks.hpp"
#include "gcface/pde_check.hpp"

namespace gcface {

// Versioned record tags. A reader rejects any other value.
inline constexpr const char* kFaceFormat = "gcface.face/1";
inline constexpr const char* kFaceListFormat = "gcface.face-list/1";
inline constexpr const char* kFVectorFormat = "gcface.fvector/1";
inline constexpr const char* kFVectorTableFormat = "gcface.fvector-table/1";
inline constexpr const char* kPdeReportFormat = "gcface.pde-report/1";
inline constexpr const char* kIsoReportFormat = "gcface.iso-report/1";
inline constexpr const char* kIdentityReportFormat = "gcface.identity-report/1";

nlohmann::json composition_json(const Composition& k);
Composition composition_from_json(const nlohmann::json& j);

/// {"format", "composition", "edge_count", "bits", "dim"}; optionally the
/// terminal word and the child face.
nlohmann::json face_record(const DiagramFace& f, bool with_decomposition = false);
/// Throws std::invalid_argument on a wrong tag or a non-face bit string.
DiagramFace face_from_record(const nlohmann::json& j);

nlohmann::json face_list_record(const DiagramPtr& diagram, const std::vector<DiagramFace>& faces,
                                bool with_decomposition = false);
std::vector<DiagramFace> faces_from_list_record(const nlohmann::json& j);

/// Coefficients as decimal strings, lowest degree first.
nlohmann::json fvector_record(const Composition& k, const FPolynomial& f);
nlohmann::json fvector_table(const std::vector<Composition>& compositions);
FPolynomial fpolynomial_from_record(const nlohmann::json& j);

nlohmann::json pde_report_record(const PdeReport& r);
nlohmann::json iso_report_record(const IsomorphismReport& r);
nlohmann::json identity_report_record(const IdentityReport& r);

} // namespace gcface

#endif
