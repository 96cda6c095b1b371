#pragma once

// Machine-readable (JSON, stable key order) and human-readable renderings
// of results. Every JSON document carries "schema": 1.

#include <string>

#include <nlohmann/json.hpp>

#include "taumatch/bijection.hpp"

namespace taumatch {

inline constexpr int kReportSchema = 1;

nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json morphism_to_json(const Morphism& f);
Morphism morphism_from_json(const nlohmann::json& j);

/// {"dims": [...], "maps": {"<arrow>": [["..."]]}}
nlohmann::ordered_json representation_to_json(const Representation& m);

nlohmann::ordered_json to_json(const BijectionReport& report);
/// Inverse of to_json; derived display fields ("cycles", "index") are ignored.
BijectionReport bijection_report_from_json(const nlohmann::json& j);

nlohmann::ordered_json pair_verification_to_json(const SupportPair& pair, const PairVerification& v);

std::string render_text(const BijectionReport& report);
std::string render_text(const SupportPair& pair, const PairVerification& v);
std::string render_text(const Representation& m);

/// "(1, 1, 0)"
std::string format_dims(const std::vector<std::size_t>& dims);
/// "{1, 2, 3}", 1-based
std::string format_set(const std::vector<std::size_t>& set);

}  // namespace taumatch
