// meanfield: theory tables, sampling runs and verification suites for the
// mean-field O(N) model. Exit codes: 0 success, 1 failure, 2 usage error.

#include "meanfield/errors.hpp"
#include "meanfield/io.hpp"
#include "meanfield/oracle.hpp"
#include "meanfield/sampler.hpp"
#include "meanfield/stats.hpp"
#include "meanfield/theory.hpp"
#include "meanfield/verify.hpp"

#include <CLI11.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace meanfield;
using Clock = std::chrono::steady_clock;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  return grid;
}

void finish(io::RunManifest manifest, const std::string& out, const std::string& body,
            Clock::time_point start) {
  io::write_text_file(out, body);
  manifest.outputs.push_back(out);
  manifest.wall_seconds = seconds_since(start);
  io::write_manifest(manifest, out);
}

// ---------------------------------------------------------------- theory

struct CurveArgs {
  int spin_dim = 2;
  double beta_min = 0.0;
  double beta_max = 6.0;
  int steps = 601;
  std::string out;
};

int theory_curve(const CurveArgs& a) {
  const auto start = Clock::now();
  if (a.beta_min < 0.0 || a.beta_max < a.beta_min || a.steps < 1) {
    throw UsageError("need 0 <= beta-min <= beta-max and steps >= 1");
  }
  std::ostringstream csv;
  csv << "beta,r_star,free_energy,magnetization,variance_v\n";
  for (double beta : linear_grid(a.beta_min, a.beta_max, a.steps)) {
    const auto p = theory::theory_point(a.spin_dim, beta);
    csv << io::format_double(p.beta) << ',' << io::format_double(p.r_star) << ','
        << io::format_double(p.free_energy) << ',' << io::format_double(p.magnetization) << ','
        << (p.variance_v ? io::format_double(*p.variance_v) : "") << '\n';
  }
  io::RunManifest m;
  m.subcommand = "theory-curve";
  m.parameters = {{"spin_dim", a.spin_dim}, {"beta_min", a.beta_min},
                  {"beta_max", a.beta_max}, {"steps", a.steps}};
  finish(m, a.out, csv.str(), start);
  return exit_ok;
}

struct RateArgs {
  int spin_dim = 2;
  double beta = 3.0;
  double r_max = 5.0;
  int steps = 501;
  bool normalized = false;
  std::string out;
};

int theory_rate(const RateArgs& a) {
  const auto start = Clock::now();
  if (a.beta < 0.0 || a.r_max <= 0.0 || a.steps < 2) {
    throw UsageError("need beta >= 0, r-max > 0 and steps >= 2");
  }
  std::ostringstream csv;
  csv << "r,phi\n";
  for (double r : linear_grid(0.0, a.r_max, a.steps)) {
    const double phi = a.normalized ? theory::normalized_rate(a.spin_dim, a.beta, r)
                                    : theory::rate_function(a.spin_dim, a.beta, r);
    csv << io::format_double(r) << ',' << io::format_double(phi) << '\n';
  }
  io::RunManifest m;
  m.subcommand = "theory-rate";
  m.parameters = {{"spin_dim", a.spin_dim}, {"beta", a.beta},         {"r_max", a.r_max},
                  {"steps", a.steps},       {"normalized", a.normalized}};
  finish(m, a.out, csv.str(), start);
  return exit_ok;
}

struct DensityArgs {
  int spin_dim = 2;
  double t_max = 0.0;  // 0 selects a cutoff with tail mass below 1e-8
  // Fine enough that the trapezoid rule over the grid recovers unit mass to
  // 1e-6 despite the square-root cusp at t = 0 for N = 3.
  int steps = 40001;
  std::string out;
};

int theory_critical_density(const DensityArgs& a) {
  const auto start = Clock::now();
  if (a.spin_dim < 1 || a.t_max < 0.0 || a.steps < 2) {
    throw UsageError("need spin-dim >= 1, t-max >= 0 and steps >= 2");
  }
  const auto law = theory::critical_law(a.spin_dim);
  double t_max = a.t_max;
  if (t_max == 0.0) {
    // P(T > t) = Q(N/4, k t^2).
    t_max = std::sqrt(boost::math::gamma_q_inv(0.25 * a.spin_dim, 1e-9) / law.k);
  }
  std::ostringstream csv;
  csv << "t,p\n";
  for (double t : linear_grid(0.0, t_max, a.steps)) {
    csv << io::format_double(t) << ',' << io::format_double(law.density(t)) << '\n';
  }
  io::RunManifest m;
  m.subcommand = "theory-critical-density";
  m.parameters = {{"spin_dim", a.spin_dim}, {"t_max", t_max}, {"steps", a.steps}};
  finish(m, a.out, csv.str(), start);
  return exit_ok;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  int spin_dim = 2;
  std::size_t sites = 256;
  double beta = 1.0;
  std::uint64_t sweeps = 1000;
  std::uint64_t burn_in = 200;
  std::uint64_t thin = 5;
  std::size_t chains = 1;
  std::uint64_t seed = 1;
  std::string init = "uniform";
  std::string record = "summary";
  unsigned threads = 0;
  std::string out;
};

// Per record: S_1..S_N, |S_n|/n, H_n.
std::vector<double> record_matrix(const sampler::ChainOutput& c) {
  const auto dim = static_cast<std::size_t>(c.params.spin_dim);
  std::vector<double> rows;
  rows.reserve(c.size() * (dim + 2));
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto s = c.total_spin(k);
    double norm2 = 0.0;
    for (double x : s) {
      rows.push_back(x);
      norm2 += x * x;
    }
    rows.push_back(std::sqrt(norm2) / static_cast<double>(c.params.sites));
    rows.push_back(c.energies[k]);
  }
  return rows;
}

nlohmann::json regime_fit(const ModelParams& p, const std::vector<sampler::ChainOutput>& chains) {
  std::vector<double> w;
  stats::Cdf cdf;
  stats::Quantile quantile;
  std::string regime;
  if (p.beta < p.spin_dim) {
    regime = "subcritical";
    for (const auto& c : chains) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        w.push_back(stats::w_subcritical(c.total_spin(k), p.sites, p.spin_dim, p.beta)[0]);
      }
    }
    cdf = [](double x) { return stats::normal_cdf(x); };
    quantile = [](double q) { return stats::normal_quantile(q); };
  } else if (p.beta > p.spin_dim && p.spin_dim == 2) {
    regime = "supercritical";
    const double b = theory::g_inverse(2, p.beta);
    const double sd = std::sqrt(theory::supercritical_variance(p.beta));
    for (const auto& c : chains) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        w.push_back(stats::w_supercritical(c.total_spin(k), p.sites, p.beta, b));
      }
    }
    cdf = [sd](double x) { return stats::normal_cdf(x, 0.0, sd); };
    quantile = [sd](double q) { return stats::normal_quantile(q, 0.0, sd); };
  } else {
    return nullptr;
  }
  // ESS needs the time order, the distances need the sorted sample.
  stats::EmpiricalSummary s = stats::summarize(w, 1, 0);
  std::sort(w.begin(), w.end());
  s.ks = stats::ks_distance(w, cdf);
  s.w1 = stats::wasserstein1(w, quantile);
  nlohmann::json j = s.to_json();
  j["regime"] = regime;
  j["statistic"] = regime == "subcritical" ? "W_n component 1" : "W_n";
  return j;
}

int sample(const SampleArgs& a) {
  const auto start = Clock::now();
  ModelParams params{a.spin_dim, a.sites, a.beta};
  sampler::SamplerConfig cfg;
  cfg.sweeps = a.sweeps;
  cfg.burn_in_sweeps = a.burn_in;
  cfg.thin = a.thin;
  cfg.seed = a.seed;
  cfg.init = a.init == "aligned" ? sampler::InitKind::aligned : sampler::InitKind::uniform;
  try {
    params.validate();
    cfg.validate();
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }
  if (a.chains < 1) {
    throw UsageError("chains must be >= 1");
  }
  const unsigned threads = a.threads > 0 ? a.threads : sampler::default_thread_count();

  io::RunManifest m;
  m.subcommand = "sample";
  m.seed = a.seed;
  m.parameters = {{"spin_dim", a.spin_dim}, {"sites", a.sites},   {"beta", a.beta},
                  {"sweeps", a.sweeps},     {"burn_in", a.burn_in}, {"thin", a.thin},
                  {"chains", a.chains},     {"seed", a.seed},     {"init", a.init},
                  {"record", a.record},     {"threads", threads}};

  const auto chains = sampler::run_chains(params, cfg, a.chains, threads);

  const std::size_t dim = static_cast<std::size_t>(a.spin_dim) + 2;
  nlohmann::json summary;
  summary["fields"] = nlohmann::json::array();
  for (int c = 1; c <= a.spin_dim; ++c) {
    summary["fields"].push_back("s_" + std::to_string(c));
  }
  summary["fields"].push_back("magnetization");
  summary["fields"].push_back("energy");
  summary["chains"] = nlohmann::json::array();

  std::vector<double> merged;
  std::vector<double> merged_ess(dim, 0.0);
  bool complete = true;
  for (const auto& c : chains) {
    const auto rows = record_matrix(c);
    nlohmann::json entry = {{"chain_id", c.config.chain_id}, {"complete", c.complete}};
    if (!c.complete) {
      complete = false;
      m.notes.push_back("chain " + std::to_string(c.config.chain_id) + ": " + c.error);
    }
    if (c.size() > 0) {
      const auto s = stats::summarize(rows, dim, a.spin_dim);
      for (std::size_t i = 0; i < dim; ++i) {
        merged_ess[i] += s.ess[i];
      }
      entry["summary"] = s.to_json();
    } else {
      entry["summary"] = nullptr;
    }
    summary["chains"].push_back(entry);
    merged.insert(merged.end(), rows.begin(), rows.end());
  }
  if (!merged.empty()) {
    auto s = stats::summarize(merged, dim, a.spin_dim);
    // Pooled records are not one time series; ESS is summed over chains.
    s.ess = merged_ess;
    summary["merged"] = s.to_json();
    summary["merged"]["limit_fit"] = regime_fit(params, chains);
  } else {
    summary["merged"] = nullptr;
  }
  summary["complete"] = complete;

  if (a.record == "full") {
    for (const auto& c : chains) {
      const std::string path = a.out + ".chain" + std::to_string(c.config.chain_id) + ".csv";
      std::ostringstream csv;
      sampler::write_records_csv(c, csv);
      io::RunManifest cm = m;
      cm.complete = c.complete;
      finish(cm, path, csv.str(), start);
      m.outputs.push_back(path);
    }
  }
  m.complete = complete;
  finish(m, a.out, summary.dump(2) + "\n", start);
  if (!complete) {
    std::cerr << "sample: run incomplete, partial output written to " << a.out << '\n';
    return exit_fail;
  }
  return exit_ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::string level = "full";
  std::uint64_t seed = verify::SuiteOptions{}.seed;
  unsigned threads = 0;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const auto start = Clock::now();
  verify::SuiteOptions options;
  options.level = a.level == "quick" ? verify::Level::quick : verify::Level::full;
  options.seed = a.seed;
  options.threads = a.threads > 0 ? a.threads : sampler::default_thread_count();
  const auto reports = verify::run_suite(a.suite, options);

  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed()) {
      ++failed;
      std::cerr << "FAIL " << r.group << '/' << r.name << ' ' << r.params.dump()
                << " fast=" << io::format_double(r.fast_value)
                << " oracle=" << io::format_double(r.oracle_value)
                << " tol=" << io::format_double(r.tolerance) << " (" << verify::to_string(r.kind)
                << ")\n";
    }
  }
  std::cout << a.suite << ": " << reports.size() - failed << '/' << reports.size()
            << " checks passed\n";
  if (!a.out.empty()) {
    io::RunManifest m;
    m.subcommand = "verify";
    m.seed = a.seed;
    m.parameters = {{"suite", a.suite}, {"level", a.level}, {"threads", options.threads}};
    finish(m, a.out, verify::to_json(reports).dump(2) + "\n", start);
  }
  return failed == 0 ? exit_ok : exit_fail;
}

int golden(const std::string& out) {
  const auto start = Clock::now();
  io::RunManifest m;
  m.subcommand = "golden";
  finish(m, out, oracle::generate_golden().dump(2) + "\n", start);
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean-field O(N) spin model: theory, sampling and verification"};
  app.set_version_flag("--version", std::string(MEANFIELD_VERSION));
  app.require_subcommand(1);

  CurveArgs curve;
  auto* c = app.add_subcommand("theory-curve", "Tabulate r*, free energy, magnetization and V");
  c->add_option("--spin-dim", curve.spin_dim)->check(CLI::Range(1, 64));
  c->add_option("--beta-min", curve.beta_min);
  c->add_option("--beta-max", curve.beta_max);
  c->add_option("--steps", curve.steps, "Number of grid points");
  c->add_option("--out", curve.out)->required();

  RateArgs rate;
  auto* r = app.add_subcommand("theory-rate", "Tabulate the rate function over r");
  r->add_option("--spin-dim", rate.spin_dim)->check(CLI::Range(1, 64));
  r->add_option("--beta", rate.beta);
  r->add_option("--r-max", rate.r_max);
  r->add_option("--steps", rate.steps, "Number of grid points");
  r->add_flag("--normalized", rate.normalized, "Subtract the free energy");
  r->add_option("--out", rate.out)->required();

  DensityArgs density;
  auto* d = app.add_subcommand("theory-critical-density", "Tabulate the critical density p_N");
  d->add_option("--spin-dim", density.spin_dim)->check(CLI::Range(1, 64));
  d->add_option("--t-max", density.t_max, "0 picks a cutoff with tail mass < 1e-8");
  d->add_option("--steps", density.steps, "Number of grid points");
  d->add_option("--out", density.out)->required();

  SampleArgs samp;
  auto* s = app.add_subcommand("sample", "Run Glauber dynamics chains");
  s->add_option("--spin-dim", samp.spin_dim)->check(CLI::Range(1, 64));
  s->add_option("--sites", samp.sites)->check(CLI::PositiveNumber);
  s->add_option("--beta", samp.beta);
  s->add_option("--sweeps", samp.sweeps, "Post burn-in sweeps per chain");
  s->add_option("--burn-in", samp.burn_in);
  s->add_option("--thin", samp.thin);
  s->add_option("--chains", samp.chains);
  s->add_option("--seed", samp.seed);
  s->add_option("--init", samp.init)->check(CLI::IsMember({"uniform", "aligned"}));
  s->add_option("--record", samp.record)->check(CLI::IsMember({"summary", "full"}));
  s->add_option("--threads", samp.threads, "Worker threads (default MEANFIELD_THREADS)");
  s->add_option("--out", samp.out)->required();

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", ver.suite)->required()->check(CLI::IsMember(verify::suite_names()));
  v->add_option("--level", ver.level)->check(CLI::IsMember({"quick", "full"}));
  v->add_option("--seed", ver.seed);
  v->add_option("--threads", ver.threads);
  v->add_option("--out", ver.out);

  std::string golden_out;
  auto* g = app.add_subcommand("golden", "Write the oracle golden-value table");
  g->add_option("--out", golden_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*c) return theory_curve(curve);
    if (*r) return theory_rate(rate);
    if (*d) return theory_critical_density(density);
    if (*s) return sample(samp);
    if (*v) return run_verify(ver);
    if (*g) return golden(golden_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
  return exit_usage;
}
