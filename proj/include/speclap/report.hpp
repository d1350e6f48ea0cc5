#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace speclap {

enum class CheckStatus { pass, fail, not_applicable };

const char* to_string(CheckStatus s);

/// Outcome of one identity/bound/classification check. `residual` is the
/// worst violation or residual observed (0 when nothing was measured).
struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  nlohmann::json witness = nlohmann::json::object();
  std::vector<CheckReport> parts;
  std::string note;

  bool pass() const { return status == CheckStatus::pass; }

  static CheckReport not_applicable(std::string check, std::string why);

  /// Pass iff no part failed; residual is the max over parts.
  static CheckReport aggregate(std::string check, std::vector<CheckReport> parts);
};

/// Schema "speclap.report/1": {check, pass, status, residual, witness,
/// [parts], [note]}.
nlohmann::json to_json(const CheckReport& r);

inline constexpr const char* kReportSchema = "speclap.report/1";

}  // namespace speclap
