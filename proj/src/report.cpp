#include "speclap/report.hpp"

#include <algorithm>
#include <cmath>

namespace speclap {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

CheckReport CheckReport::not_applicable(std::string check, std::string why) {
  CheckReport r;
  r.check = std::move(check);
  r.status = CheckStatus::not_applicable;
  r.note = std::move(why);
  return r;
}

CheckReport CheckReport::aggregate(std::string check, std::vector<CheckReport> parts) {
  CheckReport r;
  r.check = std::move(check);
  bool any_applicable = parts.empty();
  for (const auto& p : parts) {
    if (p.status == CheckStatus::fail) r.status = CheckStatus::fail;
    if (p.status != CheckStatus::not_applicable) any_applicable = true;
    r.residual = std::max(r.residual, p.residual);
  }
  if (!any_applicable) r.status = CheckStatus::not_applicable;
  r.parts = std::move(parts);
  return r;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["pass"] = r.pass();
  j["status"] = to_string(r.status);
  // JSON has no infinities.
  j["residual"] = std::isfinite(r.residual) ? nlohmann::json(r.residual) : nlohmann::json(nullptr);
  j["witness"] = r.witness;
  if (!r.parts.empty()) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    j["parts"] = std::move(parts);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace speclap
