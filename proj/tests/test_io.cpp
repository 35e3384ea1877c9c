#include "meanfield/io.hpp"
#include "meanfield/report.hpp"

#include <doctest.h>

#include <clocale>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

using namespace meanfield;

TEST_CASE("doubles round trip through their text form") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 1.7976931348623157e308}) {
    const auto text = io::format_double(x);
    CHECK(std::stod(text) == x);
    CHECK(text.find(',') == std::string::npos);
  }
  CHECK(io::format_double(2.0) == "2");
  CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("formatting ignores the global locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(io::format_double(0.5) == "0.5");
  }
  std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("manifest sits beside its output") {
  const auto dir = std::filesystem::temp_directory_path() / "meanfield_test_io";
  std::filesystem::create_directories(dir);
  const std::string out = (dir / "table.csv").string();
  io::write_text_file(out, "a,b\n1,2\n");
  io::RunManifest m;
  m.subcommand = "demo";
  m.seed = 42;
  m.outputs = {out};
  io::write_manifest(m, out);
  CHECK(io::manifest_path(out) == out + ".manifest.json");
  std::ifstream in(io::manifest_path(out));
  const auto j = nlohmann::json::parse(in);
  CHECK(j["subcommand"] == "demo");
  CHECK(j["seed"] == 42);
  CHECK(j["code_version"] == MEANFIELD_VERSION);
  CHECK(j["complete"] == true);
  CHECK_THROWS(io::write_text_file((dir / "missing" / "x.csv").string(), "x"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("oracle reports derive pass or fail from their values") {
  verify::OracleReport r;
  r.oracle_value = 2.0;
  r.fast_value = 2.001;
  r.tolerance = 1e-3;
  r.kind = verify::CheckKind::relative;
  CHECK(r.passed());
  r.kind = verify::CheckKind::absolute;
  r.tolerance = 1e-4;
  CHECK_FALSE(r.passed());
  r.kind = verify::CheckKind::standard_errors;
  r.tolerance = 3.0;
  r.standard_error = 0.001;
  CHECK(r.passed());
  r.kind = verify::CheckKind::at_most;
  r.tolerance = 2.0;
  CHECK_FALSE(r.passed());
  r.kind = verify::CheckKind::at_least;
  CHECK(r.passed());
  r.fast_value = std::nan("");
  CHECK_FALSE(r.passed());
  r.kind = verify::CheckKind::info;
  CHECK(r.passed());
  const auto j = r.to_json();
  CHECK(j["fast_value"].is_null());
  CHECK(j["kind"] == "info");
  CHECK(verify::all_passed({r}));
}
