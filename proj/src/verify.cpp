#include "meanfield/verify.hpp"

#include "meanfield/oracle.hpp"
#include "meanfield/quadrature.hpp"
#include "meanfield/sampler.hpp"
#include "meanfield/specfun.hpp"
#include "meanfield/stats.hpp"
#include "meanfield/theory.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace meanfield::verify {

namespace {

using Clock = std::chrono::steady_clock;
using specfun::Order;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

OracleReport make(std::string group, std::string name, nlohmann::json params, double oracle,
                  double fast, double tolerance, CheckKind kind, double se = 0.0) {
  OracleReport r;
  r.group = std::move(group);
  r.name = std::move(name);
  r.params = std::move(params);
  r.oracle_value = oracle;
  r.fast_value = fast;
  r.tolerance = tolerance;
  r.kind = kind;
  r.standard_error = se;
  return r;
}

OracleReport runtime_report(const std::string& group, Clock::time_point start, double limit) {
  return make(group, "runtime_seconds", {{"limit", limit}}, limit, seconds_since(start), limit,
              CheckKind::at_most);
}

bool full(const SuiteOptions& o) { return o.level == Level::full; }

// Sample-size floors are gated at the full level only; quick runs are too
// short to meet them and record the achieved size instead.
CheckKind floor_kind(const SuiteOptions& o) {
  return full(o) ? CheckKind::at_least : CheckKind::info;
}

/// A scalar statistic collected from every record of every chain.
struct Pooled {
  std::vector<double> values;
  double ess = 0.0;

  double mean() const { return stats::mean(values); }
  double standard_error() const {
    return stats::pooled_standard_error(stats::variance(values), ess);
  }
};

Pooled pool(const std::vector<sampler::ChainOutput>& chains,
            const std::function<double(std::span<const double>)>& statistic) {
  Pooled out;
  for (const auto& chain : chains) {
    std::vector<double> series;
    series.reserve(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k) {
      series.push_back(statistic(chain.total_spin(k)));
    }
    out.ess += stats::effective_sample_size(series).value;
    out.values.insert(out.values.end(), series.begin(), series.end());
  }
  return out;
}

double squared_norm(std::span<const double> s) {
  double acc = 0.0;
  for (double x : s) {
    acc += x * x;
  }
  return acc;
}

double ks_of(std::vector<double> samples, const stats::Cdf& cdf) {
  std::sort(samples.begin(), samples.end());
  return stats::ks_distance(samples, cdf);
}

sampler::SamplerConfig chain_config(std::uint64_t seed, std::uint64_t sweeps,
                                    std::uint64_t burn_in, std::uint64_t thin) {
  sampler::SamplerConfig c;
  c.seed = seed;
  c.sweeps = sweeps;
  c.burn_in_sweeps = burn_in;
  c.thin = thin;
  return c;
}

// Distinct sub-seeds per scenario, so that suites do not share streams.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t scenario) {
  return seed * 1000003ULL + scenario;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"specfun",       "theory",   "oracle",
                                              "subcritical",   "supercritical",
                                              "critical",      "macrostate"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<OracleReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "specfun") return specfun_suite(options);
  if (name == "theory") return theory_suite(options);
  if (name == "oracle") return oracle_suite(options);
  if (name == "subcritical") return subcritical_suite(options);
  if (name == "supercritical") return supercritical_suite(options);
  if (name == "critical") return critical_suite(options);
  if (name == "macrostate") return macrostate_suite(options);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<OracleReport> specfun_suite(const SuiteOptions&) {
  const auto start = Clock::now();
  std::vector<OracleReport> out;
  const double xs[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0};
  for (int twice = 0; twice <= 4; ++twice) {
    const auto nu = Order::from_twice(twice);
    for (double x : xs) {
      out.push_back(make("bessel_i", "bessel_i_vs_series", {{"nu", nu.value()}, {"x", x}},
                         oracle::bessel_series(nu, x), specfun::bessel_i(nu, x), 1e-12,
                         CheckKind::relative));
    }
  }
  for (double x : xs) {
    const double pre = std::sqrt(2.0 / (std::numbers::pi * x));
    out.push_back(make("half_integer", "bessel_i_half", {{"x", x}}, pre * std::sinh(x),
                       specfun::bessel_i(Order::from_twice(1), x), 1e-12, CheckKind::relative));
    out.push_back(make("half_integer", "bessel_i_three_halves", {{"x", x}},
                       pre * (std::cosh(x) - std::sinh(x) / x),
                       specfun::bessel_i(Order::from_twice(3), x), 1e-12, CheckKind::relative));
  }
  for (int twice = 2; twice <= 4; ++twice) {
    const auto nu = Order::from_twice(twice);
    for (double x : {0.01, 1.0, 7.5, 25.0}) {
      out.push_back(make("ratio", "bessel_ratio_vs_series", {{"nu", nu.value()}, {"x", x}},
                         oracle::bessel_ratio_series(nu, x), specfun::bessel_ratio(nu, x),
                         1e-12, CheckKind::relative));
    }
  }
  out.push_back(runtime_report("runtime", start, 5.0));
  return out;
}

std::vector<OracleReport> theory_suite(const SuiteOptions&) {
  const auto start = Clock::now();
  std::vector<OracleReport> out;

  for (int n = 1; n <= 4; ++n) {
    out.push_back(make("critical-temperature", "g_near_zero", {{"N", n}, {"r", 1e-3}}, n,
                       theory::g(n, 1e-3), 1e-5, CheckKind::absolute));
  }

  for (int n = 1; n <= 4; ++n) {
    for (double f : {0.5, 0.9, 1.0}) {
      const double beta = f * n;
      out.push_back(make("phase-transition", "free_energy_zero", {{"N", n}, {"beta", beta}},
                         0.0, theory::free_energy(n, beta), 0.0, CheckKind::absolute));
    }
    out.push_back(make("phase-transition", "free_energy_continuous",
                       {{"N", n}, {"beta", n + 0.01}}, 0.0, theory::free_energy(n, n + 0.01),
                       1e-3, CheckKind::absolute));
    // Largest increase between consecutive grid points; must not be positive.
    double worst = -std::numeric_limits<double>::infinity();
    double prev = theory::free_energy(n, n);
    for (int i = 1; i < 200; ++i) {
      const double beta = n + 4.0 * i / 199.0;
      const double fe = theory::free_energy(n, beta);
      worst = std::max(worst, fe - prev);
      prev = fe;
    }
    out.push_back(make("phase-transition", "free_energy_max_increase",
                       {{"N", n}, {"grid", 200}, {"beta_max", n + 4.0}}, 0.0, worst, 0.0,
                       CheckKind::at_most));
  }
  for (auto [n, beta] : {std::pair{2, 3.0}, {3, 4.0}, {4, 5.0}}) {
    const auto grid = oracle::phi_grid_minimize(n, beta, 20.0, 200000);
    out.push_back(make("phase-transition", "grid_argmin_vs_g_inverse",
                       {{"N", n}, {"beta", beta}}, grid.argmin, theory::g_inverse(n, beta),
                       1e-8, CheckKind::absolute));
    out.push_back(make("phase-transition", "grid_min_vs_free_energy",
                       {{"N", n}, {"beta", beta}}, grid.min_value,
                       theory::free_energy(n, beta), 1e-8, CheckKind::absolute));
  }

  const double closed[] = {4.0 * std::sqrt(std::numbers::pi),
                           std::pow(5.0, 0.75) * std::sqrt(54.0) * std::tgamma(0.75), 192.0};
  const double ks[] = {1.0 / 64.0, 1.0 / 180.0, 1.0 / 384.0};
  for (int n = 2; n <= 4; ++n) {
    const double k = theory::critical_k(n);
    const double z = quadrature::integrate_to_infinity(
        [n, k](double t) { return std::pow(t, 0.5 * (n - 2)) * std::exp(-k * t * t); },
        0.0);
    out.push_back(make("critical-densities", "normalizer", {{"N", n}}, closed[n - 2], z, 1e-8,
                       CheckKind::relative));
    out.push_back(make("critical-densities", "normalizer_cached", {{"N", n}}, closed[n - 2],
                       theory::critical_law(n).z_norm, 1e-8, CheckKind::relative));
    out.push_back(make("critical-densities", "k", {{"N", n}}, ks[n - 2], k, 1e-15,
                       CheckKind::relative));
  }
  for (int n = 1; n <= 4; ++n) {
    const double k = theory::critical_k(n);
    const auto law = theory::critical_law(n);
    for (double t : {5.0, 20.0, 60.0}) {
      out.push_back(make("critical-densities", "cdf_vs_incomplete_gamma", {{"N", n}, {"t", t}},
                         boost::math::gamma_p(0.25 * n, k * t * t), law.cdf(t), 1e-8,
                         CheckKind::absolute));
    }
  }

  for (int i = 0; i < 20; ++i) {
    const double beta = 0.25 + 0.5 * i;
    for (int j = 0; j < 20; ++j) {
      const double b = 0.05 + 0.6 * j;
      const double r = specfun::bessel_ratio(Order::from_twice(2), b);
      out.push_back(make("entropy-decomposition", "phi_vs_entropy_minus_energy",
                         {{"beta", beta}, {"b", b}},
                         theory::relative_entropy_exponential(b) - 0.5 * beta * r * r,
                         theory::phi_functional(2, beta, b), 1e-12, CheckKind::absolute));
    }
  }
  out.push_back(runtime_report("runtime", start, 30.0));
  return out;
}

std::vector<OracleReport> oracle_suite(const SuiteOptions& options) {
  const auto start = Clock::now();
  std::vector<OracleReport> out;
  const std::uint64_t chains = 4;
  const std::uint64_t sweeps = full(options) ? 250000 : 50000;
  const std::uint64_t burn_in = 1000;

  auto mean_s2 = [&](int spin_dim, std::size_t sites, double beta, std::uint64_t scenario) {
    const ModelParams params{spin_dim, sites, beta};
    auto cfg = chain_config(sub_seed(options.seed, scenario), sweeps, burn_in, 1);
    const auto runs = sampler::run_chains(params, cfg, chains, options.threads);
    return pool(runs, squared_norm);
  };
  const nlohmann::json design = {{"chains", chains}, {"sweeps_per_chain", sweeps}};

  std::uint64_t scenario = 100;
  for (double beta : {0.5, 1.0, 2.0, 3.0}) {
    const auto est = mean_s2(2, 3, beta, scenario++);
    const auto exact = oracle::xy_quadrature(3, beta, 256);
    out.push_back(make("xy-quadrature", "mean_s2",
                       {{"N", 2}, {"n", 3}, {"beta", beta}, {"design", design}, {"ess", est.ess}},
                       exact.mean_s2, est.mean(), 3.0, CheckKind::standard_errors,
                       est.standard_error()));
  }
  for (double beta : {0.5, 1.5}) {
    const auto est = mean_s2(1, 10, beta, scenario++);
    const auto exact = oracle::curie_weiss_exact(10, beta);
    out.push_back(make("curie-weiss", "mean_s2",
                       {{"N", 1}, {"n", 10}, {"beta", beta}, {"design", design}, {"ess", est.ess}},
                       exact.mean_s2, est.mean(), 3.0, CheckKind::standard_errors,
                       est.standard_error()));
  }
  for (double beta : {1.0, 4.0}) {
    const ModelParams params{2, 2, beta};
    auto cfg = chain_config(sub_seed(options.seed, scenario++), sweeps, burn_in, 1);
    const auto runs = sampler::run_chains(params, cfg, chains, options.threads);
    const auto est = pool(runs, [](std::span<const double> s) {
      return 0.5 * (squared_norm(s) - 2.0);
    });
    const double closed = specfun::bessel_ratio(Order::from_twice(2), 0.5 * beta);
    out.push_back(make("two-spin", "pair_correlation",
                       {{"N", 2}, {"n", 2}, {"beta", beta}, {"design", design}, {"ess", est.ess}},
                       closed, est.mean(), 3.0, CheckKind::standard_errors,
                       est.standard_error()));
    // The quadrature oracle itself must reproduce the closed form.
    out.push_back(make("two-spin", "quadrature_pair_correlation", {{"beta", beta}}, closed,
                       oracle::xy_quadrature(2, beta, 256).pair_correlation, 1e-10,
                       CheckKind::absolute));
  }
  out.push_back(runtime_report("runtime", start, 180.0));
  return out;
}

std::vector<OracleReport> subcritical_suite(const SuiteOptions& options) {
  const auto start = Clock::now();
  std::vector<OracleReport> out;
  const int spin_dim = 2;
  const double beta = 1.0;
  const std::uint64_t chains = 8;
  const std::uint64_t thin = 2;
  const std::uint64_t records = full(options) ? 1500 : 400;
  const std::size_t sizes[] = {256, 1024, 4096};

  std::vector<double> ks_by_size;
  std::uint64_t scenario = 200;
  for (std::size_t n : sizes) {
    const ModelParams params{spin_dim, n, beta};
    auto cfg = chain_config(sub_seed(options.seed, scenario++), records * thin, 100, thin);
    const auto runs = sampler::run_chains(params, cfg, chains, options.threads);

    std::vector<std::vector<double>> comps(spin_dim);
    stats::MomentAccumulator acc(spin_dim);
    double ess = std::numeric_limits<double>::infinity();
    for (int c = 0; c < spin_dim; ++c) {
      const auto p = pool(runs, [&](std::span<const double> s) {
        return stats::w_subcritical(s, n, spin_dim, beta)[c];
      });
      comps[c] = p.values;
      ess = std::min(ess, p.ess);
    }
    for (std::size_t k = 0; k < comps[0].size(); ++k) {
      const double w[] = {comps[0][k], comps[1][k]};
      acc.add(w);
    }
    double ks = 0.0;
    for (int c = 0; c < spin_dim; ++c) {
      ks = std::max(ks, ks_of(comps[c], [](double x) { return stats::normal_cdf(x); }));
    }
    ks_by_size.push_back(ks);
    const nlohmann::json params_json = {{"N", spin_dim}, {"n", n}, {"beta", beta},
                                        {"chains", chains}, {"records_per_chain", records},
                                        {"thin", thin}};
    if (n == 4096) {
      out.push_back(make("clt", "effective_samples", params_json, 2000.0, ess, 2000.0,
                         floor_kind(options)));
      for (int c = 0; c < spin_dim; ++c) {
        out.push_back(make("clt", "ks_component_vs_normal",
                           {{"component", c}, {"params", params_json}}, 0.0,
                           ks_of(comps[c], [](double x) { return stats::normal_cdf(x); }),
                           0.05, CheckKind::at_most));
      }
      const auto cov = acc.covariance();
      for (int a = 0; a < spin_dim; ++a) {
        for (int b = 0; b < spin_dim; ++b) {
          out.push_back(make("clt", "covariance_entry",
                             {{"row", a}, {"col", b}, {"params", params_json}},
                             a == b ? 1.0 : 0.0, cov[a * spin_dim + b], 0.1,
                             CheckKind::absolute));
        }
      }
    }
    out.push_back(make("trend", "max_component_ks", params_json, 0.0, ks, 0.0,
                       CheckKind::info));
  }
  {
    const int dim = 3;
    const double b = 1.5;
    const std::size_t n = 1024;
    const ModelParams params{dim, n, b};
    auto cfg = chain_config(sub_seed(options.seed, scenario++), records * thin, 100, thin);
    const auto runs = sampler::run_chains(params, cfg, chains, options.threads);
    for (int c = 0; c < dim; ++c) {
      const auto p = pool(runs, [&](std::span<const double> s) {
        const double w = stats::w_subcritical(s, n, dim, b)[c];
        return w * w;
      });
      out.push_back(make("generalized", "component_second_moment",
                         {{"N", dim}, {"n", n}, {"beta", b}, {"component", c}}, 1.0, p.mean(),
                         0.0, CheckKind::info, p.standard_error()));
    }
  }
  for (std::size_t i = 0; i + 1 < ks_by_size.size(); ++i) {
    out.push_back(make("trend", "ks_decrease",
                       {{"n_from", sizes[i]}, {"n_to", sizes[i + 1]}}, 0.0,
                       ks_by_size[i] - ks_by_size[i + 1], 0.0, CheckKind::at_least));
  }
  out.push_back(runtime_report("runtime", start, 300.0));
  return out;
}

std::vector<OracleReport> supercritical_suite(const SuiteOptions& options) {
  const auto start = Clock::now();
  std::vector<OracleReport> out;
  const int spin_dim = 2;
  const std::size_t n = 4096;
  const double beta = 3.0;
  const double b = theory::g_inverse(spin_dim, beta);
  const double variance = theory::supercritical_variance(beta);
  const ModelParams params{spin_dim, n, beta};

  const std::uint64_t chains = 8;
  const std::uint64_t thin = 2;
  const std::uint64_t records = full(options) ? 800 : 250;
  auto cfg = chain_config(sub_seed(options.seed, 300), records * thin, 200, thin);
  const auto runs = sampler::run_chains(params, cfg, chains, options.threads);
  const nlohmann::json params_json = {{"N", spin_dim}, {"n", n}, {"beta", beta},
                                      {"chains", chains}, {"records_per_chain", records},
                                      {"thin", thin}};

  const auto m = pool(runs, [n](std::span<const double> s) {
    return std::sqrt(squared_norm(s)) / static_cast<double>(n);
  });
  out.push_back(make("concentration", "mean_magnetization", params_json,
                     theory::magnetization(spin_dim, beta), m.mean(), 0.02,
                     CheckKind::absolute, m.standard_error()));

  const auto w = pool(runs, [&](std::span<const double> s) {
    return stats::w_supercritical(s, n, beta, b);
  });
  const double sd = std::sqrt(variance);
  out.push_back(make("clt", "effective_samples", params_json, 1500.0, w.ess, 1500.0,
                     floor_kind(options)));
  out.push_back(make("clt", "ks_w_vs_normal", {{"V", variance}, {"params", params_json}}, 0.0,
                     ks_of(w.values, [sd](double x) { return stats::normal_cdf(x, 0.0, sd); }),
                     0.08, CheckKind::at_most));
  out.push_back(make("clt", "w_variance", params_json, variance, stats::variance(w.values),
                     0.0, CheckKind::info));

  // The direction diffuses on a time scale of order n sweeps, so each
  // short chain from a uniform start contributes one angle.
  const std::uint64_t angle_chains = full(options) ? 1500 : 400;
  auto angle_cfg = chain_config(sub_seed(options.seed, 301), 1, 60, 1);
  const auto short_runs = sampler::run_chains(params, angle_cfg, angle_chains, options.threads);
  std::vector<double> angles;
  for (const auto& run : short_runs) {
    const auto s = run.total_spin(run.size() - 1);
    angles.push_back(std::atan2(s[1], s[0]));
  }
  out.push_back(make("direction", "ks_angle_vs_uniform",
                     {{"chains", angle_chains}, {"burn_in", 60}, {"N", spin_dim}, {"n", n},
                      {"beta", beta}},
                     0.0,
                     ks_of(angles,
                           [](double a) { return (a + std::numbers::pi) / (2 * std::numbers::pi); }),
                     0.05, CheckKind::at_most));
  out.push_back(runtime_report("runtime", start, 300.0));
  return out;
}

std::vector<OracleReport> critical_suite(const SuiteOptions& options) {
  const auto start = Clock::now();
  std::vector<OracleReport> out;
  const std::size_t n = 4096;
  const std::uint64_t chains = 8;
  const std::uint64_t thin = 10;
  const std::uint64_t records = full(options) ? 1500 : 300;

  std::uint64_t scenario = 400;
  for (int spin_dim = 1; spin_dim <= 3; ++spin_dim) {
    const double beta = spin_dim;
    const ModelParams params{spin_dim, n, beta};
    auto cfg = chain_config(sub_seed(options.seed, scenario++), records * thin, 500, thin);
    const auto runs = sampler::run_chains(params, cfg, chains, options.threads);
    const nlohmann::json params_json = {{"N", spin_dim}, {"n", n}, {"beta", beta},
                                        {"chains", chains}, {"records_per_chain", records},
                                        {"thin", thin}};

    // Y = |S_n|^2 / n^{3/2}, so W_n = c Y.
    const auto y = pool(runs, [n](std::span<const double> s) {
      return stats::w_critical(s, n, 1.0);
    });
    out.push_back(make("critical", "effective_samples", params_json, 2000.0, y.ess, 2000.0,
                       floor_kind(options)));

    std::vector<double> y2(y.values.size());
    std::transform(y.values.begin(), y.values.end(), y2.begin(), [](double v) { return v * v; });
    double y2_ess = 0.0;
    {
      std::size_t offset = 0;
      for (const auto& run : runs) {
        y2_ess += stats::effective_sample_size(
                      std::span<const double>(y2).subspan(offset, run.size()))
                      .value;
        offset += run.size();
      }
    }
    const double m2 = stats::mean(y2);
    const double m2_se = stats::pooled_standard_error(stats::variance(y2), y2_ess);
    const double target = oracle::critical_moment_oracle(spin_dim, 2);
    const double c = std::sqrt(target / m2);
    const double c_se = 0.5 * c * m2_se / m2;

    const auto law = theory::critical_law(spin_dim);
    std::vector<double> w(y.values.size());
    std::transform(y.values.begin(), y.values.end(), w.begin(), [c](double v) { return c * v; });
    out.push_back(make("critical", "ks_calibrated_vs_density",
                       {{"c", c}, {"params", params_json}}, 0.0,
                       ks_of(w, [&law](double t) { return law.cdf(t); }), 0.1,
                       CheckKind::at_most));
    out.push_back(make("calibration", "c_vs_n_three_halves", params_json,
                       std::pow(spin_dim, 1.5), c, 3.0, CheckKind::info, c_se));
    out.push_back(make("calibration", "c_vs_n_squared", params_json,
                       static_cast<double>(spin_dim * spin_dim), c, 3.0, CheckKind::info, c_se));
    if (spin_dim == 1) {
      out.push_back(make("critical", "ks_unit_scale_vs_curie_weiss", params_json, 0.0,
                         ks_of(y.values, [&law](double t) { return law.cdf(t); }), 0.1,
                         CheckKind::at_most));
    }
  }
  out.push_back(runtime_report("runtime", start, 600.0));
  return out;
}

std::vector<OracleReport> macrostate_suite(const SuiteOptions& options) {
  const auto start = Clock::now();
  std::vector<OracleReport> out;
  const int spin_dim = 2;
  const std::size_t n = 4096;
  const std::uint64_t chains = 4;
  const std::uint64_t snapshots_per_chain = full(options) ? 4 : 2;
  const std::uint64_t spacing = 50;

  auto projections = [&](double beta, std::uint64_t scenario) {
    const ModelParams params{spin_dim, n, beta};
    auto cfg = chain_config(sub_seed(options.seed, scenario), snapshots_per_chain * spacing, 200,
                            spacing);
    cfg.snapshot_every = 1;
    const auto runs = sampler::run_chains(params, cfg, chains, options.threads);
    std::vector<double> all;
    for (const auto& run : runs) {
      for (const auto& snap : run.snapshots) {
        const auto s = snap.total_spin();
        const double norm = std::sqrt(squared_norm(s));
        const double dir[] = {s[0] / norm, s[1] / norm};
        const auto proj = stats::projection_samples(snap, dir);
        all.insert(all.end(), proj.begin(), proj.end());
      }
    }
    return all;
  };

  const double beta = 3.0;
  const auto law = theory::MacrostateProjection::at_beta(spin_dim, beta);
  const auto ordered = projections(beta, 500);
  out.push_back(make("macrostate", "ks_projection_vs_von_mises",
                     {{"N", spin_dim}, {"n", n}, {"beta", beta}, {"b", law.concentration()},
                      {"samples", ordered.size()}},
                     0.0, ks_of(ordered, [&law](double y) { return law.cdf(y); }), 0.05,
                     CheckKind::at_most));

  const auto uniform = projections(0.0, 501);
  out.push_back(make("macrostate", "ks_projection_vs_arcsine",
                     {{"N", spin_dim}, {"n", n}, {"beta", 0.0}, {"samples", uniform.size()}}, 0.0,
                     ks_of(uniform,
                           [](double y) {
                             return 1.0 - std::acos(std::clamp(y, -1.0, 1.0)) / std::numbers::pi;
                           }),
                     0.02, CheckKind::at_most));
  out.push_back(runtime_report("runtime", start, 120.0));
  return out;
}

} // namespace meanfield::verify
