#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace meanfield::verify {

/// How fast_value is compared against oracle_value.
enum class CheckKind {
  absolute,         ///< |fast - oracle| <= tolerance
  relative,         ///< |fast - oracle| <= tolerance * |oracle|
  standard_errors,  ///< |fast - oracle| <= tolerance * standard_error
  at_most,          ///< fast <= tolerance
  at_least,         ///< fast >= tolerance
  info,             ///< recorded only, never fails
};

/// One oracle-vs-fast-path comparison. Pass/fail is derived from the stored
/// values on demand.
struct OracleReport {
  std::string group;
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  double oracle_value = 0.0;
  double fast_value = 0.0;
  double tolerance = 0.0;
  CheckKind kind = CheckKind::absolute;
  double standard_error = 0.0;

  double abs_diff() const;
  double rel_diff() const;
  bool passed() const;
  nlohmann::json to_json() const;
};

const char* to_string(CheckKind kind);

nlohmann::json to_json(const std::vector<OracleReport>& reports);

bool all_passed(const std::vector<OracleReport>& reports);

} // namespace meanfield::verify
