#pragma once

// Verification suites. Each suite compares fast paths against oracles or
// simulation against limit laws and returns one OracleReport per check;
// reports carry a group name so related checks can be summarised together.

#include "meanfield/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace meanfield::verify {

enum class Level { quick, full };

struct SuiteOptions {
  Level level = Level::full;
  std::uint64_t seed = 20240611;
  unsigned threads = 1;
};

/// specfun, theory, oracle, subcritical, supercritical, critical, macrostate.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Throws std::invalid_argument for unknown suite names.
std::vector<OracleReport> run_suite(const std::string& name, const SuiteOptions& options);

std::vector<OracleReport> specfun_suite(const SuiteOptions& options);
std::vector<OracleReport> theory_suite(const SuiteOptions& options);
std::vector<OracleReport> oracle_suite(const SuiteOptions& options);
std::vector<OracleReport> subcritical_suite(const SuiteOptions& options);
std::vector<OracleReport> supercritical_suite(const SuiteOptions& options);
std::vector<OracleReport> critical_suite(const SuiteOptions& options);
std::vector<OracleReport> macrostate_suite(const SuiteOptions& options);

} // namespace meanfield::verify
