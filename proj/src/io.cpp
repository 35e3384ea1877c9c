#include "meanfield/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace meanfield::io {

std::string format_double(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (result.ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return {buffer, result.ptr};
}

nlohmann::json RunManifest::to_json() const {
  return {{"subcommand", subcommand},
          {"parameters", parameters},
          {"seed", seed},
          {"code_version", code_version},
          {"wall_seconds", wall_seconds},
          {"outputs", outputs},
          {"complete", complete},
          {"notes", notes}};
}

std::string manifest_path(const std::string& output) { return output + ".manifest.json"; }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write to " + path + " failed");
  }
}

void write_manifest(const RunManifest& manifest, const std::string& output) {
  write_text_file(manifest_path(output), manifest.to_json().dump(2) + "\n");
}

} // namespace meanfield::io
