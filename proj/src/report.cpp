#include "meanfield/report.hpp"

#include <algorithm>
#include <cmath>

namespace meanfield::verify {

double OracleReport::abs_diff() const { return std::abs(fast_value - oracle_value); }

double OracleReport::rel_diff() const {
  const double scale = std::abs(oracle_value);
  return scale > 0.0 ? abs_diff() / scale : abs_diff();
}

bool OracleReport::passed() const {
  if (std::isnan(fast_value)) {
    return kind == CheckKind::info;
  }
  switch (kind) {
  case CheckKind::absolute:
    return abs_diff() <= tolerance;
  case CheckKind::relative:
    return abs_diff() <= tolerance * std::abs(oracle_value);
  case CheckKind::standard_errors:
    return abs_diff() <= tolerance * standard_error;
  case CheckKind::at_most:
    return fast_value <= tolerance;
  case CheckKind::at_least:
    return fast_value >= tolerance;
  case CheckKind::info:
    return true;
  }
  return false;
}

const char* to_string(CheckKind kind) {
  switch (kind) {
  case CheckKind::absolute:
    return "absolute";
  case CheckKind::relative:
    return "relative";
  case CheckKind::standard_errors:
    return "standard_errors";
  case CheckKind::at_most:
    return "at_most";
  case CheckKind::at_least:
    return "at_least";
  case CheckKind::info:
    return "info";
  }
  return "unknown";
}

namespace {
nlohmann::json number(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}
} // namespace

nlohmann::json OracleReport::to_json() const {
  return {{"group", group},
          {"name", name},
          {"params", params},
          {"oracle_value", number(oracle_value)},
          {"fast_value", number(fast_value)},
          {"abs_diff", number(abs_diff())},
          {"rel_diff", number(rel_diff())},
          {"tolerance", number(tolerance)},
          {"kind", to_string(kind)},
          {"standard_error", number(standard_error)},
          {"passed", passed()}};
}

nlohmann::json to_json(const std::vector<OracleReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    out.push_back(r.to_json());
  }
  return out;
}

bool all_passed(const std::vector<OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const OracleReport& r) { return r.passed(); });
}

} // namespace meanfield::verify
