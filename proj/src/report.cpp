#include "derivscope/report.hpp"

namespace derivscope {

Json rational_json(const Rational& r) { return Json(r.str()); }

Json rational_list_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(v.str());
  return out;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["check"] = report.check;
  j["subject"] = report.subject;
  j["params"] = rational_list_json(report.params);
  j["status"] = std::string(to_string(report.status));
  if (report.failed()) j["witness"] = report.witness;
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

Json report_document(std::string_view command, std::string_view subject, Json params,
                     Json results, bool pass) {
  Json doc;
  doc["tool_version"] = std::string(kToolVersion);
  doc["subject"] = std::string(subject);
  doc["command"] = std::string(command);
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  doc["pass"] = pass;
  return doc;
}

}  // namespace derivscope
