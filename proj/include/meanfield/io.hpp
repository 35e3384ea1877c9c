#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace meanfield::io {

/// Shortest round-trip text for a double, at most 17 significant digits,
/// '.' as decimal separator regardless of locale.
std::string format_double(double value);

/// Record of one CLI run, written next to every output file.
struct RunManifest {
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string code_version = MEANFIELD_VERSION;
  double wall_seconds = 0.0;
  std::vector<std::string> outputs;
  bool complete = true;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// "<output>.manifest.json"
std::string manifest_path(const std::string& output);

void write_text_file(const std::string& path, const std::string& content);
void write_manifest(const RunManifest& manifest, const std::string& output);

} // namespace meanfield::io
