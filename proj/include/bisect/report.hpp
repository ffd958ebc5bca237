#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bisect/constructibility.hpp"

namespace bisect {

/// Stable JSON shape, rationals rendered as exact "num/den" strings, never
/// floats:
///   verdict{q_spec, degree, decision, witness{kind, data}, root{lo, hi, decimal}}
///   certificate{mode, conclusion, root?, steps[{tag, polynomials[], residual}], candidates[]}
nlohmann::json to_json(const root_search_certificate& cert);
nlohmann::json to_json(const verdict& v, int digits);

root_search_certificate certificate_from_json(const nlohmann::json& j);
verdict verdict_from_json(const nlohmann::json& j);

/// Semantic equality of the serializable content (the root box compares by
/// endpoints and exactness; the internal certification polynomial is not
/// part of a report).
bool same_content(const verdict& a, const verdict& b);

/// Numbered human-readable narrative derived from the certificate data.
std::vector<std::string> narrative_lines(const root_search_certificate& cert);

std::string to_text(const verdict& v, int digits);

} // namespace bisect
