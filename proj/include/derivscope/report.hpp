#pragma once

#include <string_view>

#include "json.hpp"

#include "derivscope/verifier.hpp"

namespace derivscope {

// JSON report schema shared by every CLI command:
//   {"tool_version", "subject", "command", "params", "results", "pass"}
// in exactly that key order. Rationals travel as "p/q" strings (never
// floats); dimensions and counts are plain integers.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";

Json rational_json(const Rational& r);
Json rational_list_json(const std::vector<Rational>& values);

Json to_json(const CheckReport& report);

Json report_document(std::string_view command, std::string_view subject, Json params,
                     Json results, bool pass);

}  // namespace derivscope
