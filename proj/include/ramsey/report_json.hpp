#ifndef RAMSEY_REPORT_JSON_HPP
#define RAMSEY_REPORT_JSON_HPP

#include "json.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/bounds.hpp"

namespace ramsey {

/// Certificate document: {host, red, blue, red_pattern, blue_pattern} with
/// the host as graph6 and the color classes as [u, v] pairs.
nlohmann::json coloring_json(const EdgeColoring& c, const std::string& red_pattern,
                             const std::string& blue_pattern);

/// Inverse of coloring_json; pattern names are returned through the out
/// parameters when requested.
EdgeColoring coloring_from_json(const nlohmann::json& doc, std::string* red_pattern = nullptr,
                                std::string* blue_pattern = nullptr);

/// Arrowing verdict document. Timing is optional so reruns can be compared
/// byte for byte.
nlohmann::json verdict_json(const ArrowVerdict& v, const Graph& host, const Pattern& red,
                            const Pattern& blue, bool include_timing = true);

nlohmann::json report_json(const RamseyReport& r, bool include_timing = true);

}  // namespace ramsey

#endif
