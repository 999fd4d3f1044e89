#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "core/lie.hpp"
#include "core/marks.hpp"
#include "core/qidentities.hpp"

namespace orbit_euler {

enum class Format { kText, kJson, kCsv };

// "text" | "json" | "csv"; throws ParseError otherwise.
Format parse_format(std::string_view s);

nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const PSingularReport& r);
nlohmann::ordered_json to_json(const LieReport& r);
nlohmann::ordered_json to_json(const IdentityReport& r);
// Constant term first; coefficients as decimal strings.
nlohmann::ordered_json to_json(const IntPolynomial& p);

std::string render(const PSingularReport& r, Format f);
std::string render(const LieReport& r, Format f);
std::string render(const IdentityReport& r, Format f);

}  // namespace orbit_euler
