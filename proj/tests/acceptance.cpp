// Acceptance runner: `acceptance <k>` evaluates criterion k (1..11),
// `acceptance all` evaluates every criterion. Each criterion prints exactly
// one PASS/FAIL line; failing checks are listed on stderr.

#include "meanfield/io.hpp"
#include "meanfield/sampler.hpp"
#include "meanfield/verify.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace meanfield;
using verify::OracleReport;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::map<std::string, std::vector<OracleReport>> suite_cache;

const std::vector<OracleReport>& suite(const std::string& name) {
  auto it = suite_cache.find(name);
  if (it == suite_cache.end()) {
    verify::SuiteOptions options;
    options.threads = sampler::default_thread_count();
    it = suite_cache.emplace(name, verify::run_suite(name, options)).first;
  }
  return it->second;
}

std::string describe(const OracleReport& r) {
  std::ostringstream s;
  s << r.group << '/' << r.name << ' ' << r.params.dump() << " value=" << io::format_double(r.fast_value)
    << " reference=" << io::format_double(r.oracle_value) << " tol=" << io::format_double(r.tolerance)
    << " (" << verify::to_string(r.kind) << ')';
  return s.str();
}

// Gates on every report of the suite whose group is listed (all groups when
// empty). Informational reports are echoed but never gate.
Outcome from_suite(const std::string& name, const std::set<std::string>& groups) {
  Outcome out;
  int total = 0;
  int failed = 0;
  std::ostringstream info;
  for (const auto& r : suite(name)) {
    const bool selected = groups.empty() || groups.count(r.group) || r.group == "runtime";
    if (!selected) {
      continue;
    }
    if (r.kind == verify::CheckKind::info) {
      info << "; " << r.name << ' ' << r.params.value("N", 0) << ": "
           << io::format_double(r.fast_value);
      if (r.standard_error > 0.0) {
        info << " vs " << io::format_double(r.oracle_value) << " ("
             << io::format_double(r.abs_diff() / r.standard_error) << " SE)";
      }
      continue;
    }
    ++total;
    if (!r.passed()) {
      ++failed;
      out.passed = false;
      std::cerr << "  failed: " << describe(r) << '\n';
    }
  }
  out.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " checks" + info.str();
  return out;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(MEANFIELD_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome out;
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      out.passed = false;
      std::cerr << "  failed: " << what << '\n';
    }
  };

  for (int spin_dim : {1, 2, 3}) {
    const ModelParams params{spin_dim, 128, 1.0 * spin_dim};
    sampler::SamplerConfig cfg;
    cfg.sweeps = 300;
    cfg.burn_in_sweeps = 30;
    cfg.thin = 3;
    cfg.seed = 2024;
    cfg.snapshot_every = 50;
    const auto a = sampler::run_chains(params, cfg, 4, 2);
    const auto b = sampler::run_chains(params, cfg, 4, 2);
    const auto c = sampler::run_chains(params, cfg, 4, 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::string tag = "N=" + std::to_string(spin_dim) + " chain " + std::to_string(k);
      expect(a[k].totals == b[k].totals && a[k].energies == b[k].energies, tag + " rerun");
      expect(a[k].totals == c[k].totals, tag + " thread count");
      bool snaps = a[k].snapshots.size() == b[k].snapshots.size();
      for (std::size_t s = 0; snaps && s < a[k].snapshots.size(); ++s) {
        snaps = std::equal(a[k].snapshots[s].raw().begin(), a[k].snapshots[s].raw().end(),
                           b[k].snapshots[s].raw().begin());
      }
      expect(snaps, tag + " snapshots");
    }
  }

  const fs::path dir = fs::temp_directory_path() / ("meanfield_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string args =
      "sample --spin-dim 3 --sites 256 --beta 3.5 --sweeps 400 --burn-in 50 --thin 4 --chains 3 "
      "--seed 77 --record full --threads 2 --out ";
  const auto first = dir / "first.json";
  const auto second = dir / "second.json";
  expect(run_cli(args + first.string()) == 0, "sample run 1 exit code");
  expect(run_cli(args + second.string()) == 0, "sample run 2 exit code");
  expect(!slurp(first).empty() && slurp(first) == slurp(second), "summary bytes");
  for (int c = 0; c < 3; ++c) {
    const std::string suffix = ".chain" + std::to_string(c) + ".csv";
    const auto lhs = slurp(first.string() + suffix);
    expect(!lhs.empty() && lhs == slurp(second.string() + suffix), "chain CSV " + suffix);
  }
  fs::remove_all(dir);
  out.detail = std::to_string(checks) + " checks";
  return out;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> evaluate;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"special functions", [] { return from_suite("specfun", {"bessel_i", "half_integer"}); }},
      {"critical temperature", [] { return from_suite("theory", {"critical-temperature"}); }},
      {"free-energy phase transition", [] { return from_suite("theory", {"phase-transition"}); }},
      {"critical densities", [] { return from_suite("theory", {"critical-densities"}); }},
      {"entropy decomposition", [] { return from_suite("theory", {"entropy-decomposition"}); }},
      {"oracle equivalence", [] { return from_suite("oracle", {}); }},
      {"subcritical CLT", [] { return from_suite("subcritical", {}); }},
      {"supercritical concentration and CLT", [] { return from_suite("supercritical", {}); }},
      {"critical limit", [] { return from_suite("critical", {}); }},
      {"macrostate projections", [] { return from_suite("macrostate", {}); }},
      {"determinism", determinism},
  };
  return list;
}

bool evaluate(std::size_t k) {
  const auto& c = criteria()[k - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.evaluate();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream time;
  time.precision(3);
  time << secs;
  std::cout << "criterion " << k << " [" << c.title << "]: " << (out.passed ? "PASS" : "FAIL")
            << " (" << out.detail << "; " << time.str() << " s)" << std::endl;
  return out.passed;
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <1..11|all>\n";
    return 2;
  }
  const std::string arg = argv[1];
  bool ok = true;
  if (arg == "all") {
    for (std::size_t k = 1; k <= criteria().size(); ++k) {
      ok = evaluate(k) && ok;
    }
    return ok ? 0 : 1;
  }
  char* end = nullptr;
  const long k = std::strtol(arg.c_str(), &end, 10);
  if (*end != '\0' || k < 1 || k > static_cast<long>(criteria().size())) {
    std::cerr << "usage: acceptance <1..11|all>\n";
    return 2;
  }
  return evaluate(static_cast<std::size_t>(k)) ? 0 : 1;
}
