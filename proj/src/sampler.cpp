#include "meanfield/sampler.hpp"

#include "meanfield/io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <new>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace meanfield::sampler {

namespace {

constexpr std::uint64_t kRecomputeInterval = 64;
// Below this concentration e^{kappa cos} differs from 1 by less than 1e-12.
constexpr double kUniformKappa = 1e-12;
constexpr int kMaxSpinDim = 64;

double norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) {
    sum += x * x;
  }
  return std::sqrt(sum);
}

void uniform_on_sphere(RandomStream& rng, std::span<double> out) {
  if (out.size() == 1) {
    out[0] = rng.coin() ? 1.0 : -1.0;
    return;
  }
  double length = 0.0;
  do {
    for (double& x : out) {
      x = rng.normal();
    }
    length = norm(out);
  } while (length < 1e-150);
  for (double& x : out) {
    x /= length;
  }
}

// Best-Fisher rejection sampler for the von Mises law on the circle. Returns
// cos(theta) of the angle to the mean direction; the sign of theta is drawn
// separately by the caller.
double von_mises_cosine(double kappa, RandomStream& rng) {
  // tau = 1 + sqrt(1 + 4 kappa^2); rho = (tau - sqrt(2 tau)) / (2 kappa),
  // rewritten without the cancellation at small kappa.
  const double root = std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double tau = 1.0 + root;
  const double rho = tau * 2.0 * kappa / ((root + 1.0) * (tau + std::sqrt(2.0 * tau)));
  const double s = (1.0 + rho * rho) / (2.0 * rho);
  for (;;) {
    const double z = std::cos(std::numbers::pi * rng.uniform());
    const double w = (1.0 + s * z) / (s + z);
    const double y = kappa * (s - w);
    const double v = rng.uniform_open();
    if (y * (2.0 - y) - v >= 0.0 || std::log(y / v) + 1.0 - y >= 0.0) {
      return std::clamp(w, -1.0, 1.0);
    }
  }
}

// Wood's rejection sampler for the cosine w = <x, mu> of a vMF draw on
// S^{N-1}, N >= 3. The proposal is a transformed Beta((N-1)/2, (N-1)/2).
double wood_cosine(int spin_dim, double kappa, RandomStream& rng) {
  const double m1 = spin_dim - 1.0;
  const double b = m1 / (2.0 * kappa + std::sqrt(4.0 * kappa * kappa + m1 * m1));
  const double x0 = (1.0 - b) / (1.0 + b);
  const double c = kappa * x0 + m1 * std::log(1.0 - x0 * x0);
  const double shape = 0.5 * m1;
  for (;;) {
    double z;
    if (spin_dim == 3) {
      z = rng.uniform();
    } else {
      const double g1 = rng.gamma(shape);
      const double g2 = rng.gamma(shape);
      z = g1 / (g1 + g2);
    }
    const double w = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z);
    const double u = rng.uniform_open();
    if (kappa * w + m1 * std::log(1.0 - x0 * w) - c >= std::log(u)) {
      return std::clamp(w, -1.0, 1.0);
    }
  }
}

} // namespace

SpinConfiguration::SpinConfiguration(int spin_dim, std::size_t sites)
    : spin_dim_(spin_dim), sites_(sites),
      spins_(static_cast<std::size_t>(spin_dim) * sites, 0.0),
      total_(static_cast<std::size_t>(spin_dim), 0.0) {
  if (spin_dim < 1 || spin_dim > kMaxSpinDim) {
    throw std::domain_error("SpinConfiguration: spin dimension must be in [1, 64]");
  }
  if (sites < 1) {
    throw std::domain_error("SpinConfiguration: need at least one site");
  }
}

SpinConfiguration SpinConfiguration::aligned(int spin_dim, std::size_t sites) {
  SpinConfiguration config(spin_dim, sites);
  for (std::size_t i = 0; i < sites; ++i) {
    config.spins_[i * spin_dim] = 1.0;
  }
  config.recompute_total();
  return config;
}

SpinConfiguration SpinConfiguration::uniform(int spin_dim, std::size_t sites, RandomStream& rng) {
  SpinConfiguration config(spin_dim, sites);
  for (std::size_t i = 0; i < sites; ++i) {
    uniform_on_sphere(rng, {config.spins_.data() + i * spin_dim,
                            static_cast<std::size_t>(spin_dim)});
  }
  config.recompute_total();
  return config;
}

void SpinConfiguration::set_spin(std::size_t i, std::span<const double> value) {
  if (i >= sites_) {
    throw std::out_of_range("SpinConfiguration::set_spin: site index out of range");
  }
  const double length = norm(value);
  double* slot = spins_.data() + i * spin_dim_;
  for (int a = 0; a < spin_dim_; ++a) {
    const double next = value[a] / length;
    total_[a] += next - slot[a];
    slot[a] = next;
  }
}

void SpinConfiguration::recompute_total() {
  std::fill(total_.begin(), total_.end(), 0.0);
  for (std::size_t i = 0; i < sites_; ++i) {
    for (int a = 0; a < spin_dim_; ++a) {
      total_[a] += spins_[i * spin_dim_ + a];
    }
  }
}

double SpinConfiguration::total_drift() const {
  std::vector<double> fresh(total_.size(), 0.0);
  for (std::size_t i = 0; i < sites_; ++i) {
    for (int a = 0; a < spin_dim_; ++a) {
      fresh[a] += spins_[i * spin_dim_ + a];
    }
  }
  double sum = 0.0;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    sum += (fresh[a] - total_[a]) * (fresh[a] - total_[a]);
  }
  return std::sqrt(sum);
}

double SpinConfiguration::max_norm_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < sites_; ++i) {
    worst = std::max(worst, std::abs(norm(spin(i)) - 1.0));
  }
  return worst;
}

void SpinConfiguration::finish_sweep() {
  if (++sweeps_ % kRecomputeInterval == 0) {
    recompute_total();
  }
}

void SamplerConfig::validate() const {
  if (sweeps < 1) {
    throw std::domain_error("SamplerConfig: sweeps must be >= 1");
  }
  if (thin < 1) {
    throw std::domain_error("SamplerConfig: thin must be >= 1");
  }
}

void sample_von_mises_fisher(std::span<const double> mean_direction, double kappa,
                             RandomStream& rng, std::span<double> out) {
  const std::size_t dim = out.size();
  if (kappa < kUniformKappa) {
    uniform_on_sphere(rng, out);
    return;
  }
  if (dim == 1) {
    // P(+mu) = e^kappa / (e^kappa + e^-kappa).
    const double p_along = 1.0 / (1.0 + std::exp(-2.0 * kappa));
    out[0] = rng.uniform() < p_along ? mean_direction[0] : -mean_direction[0];
    return;
  }
  if (dim == 2) {
    const double c = von_mises_cosine(kappa, rng);
    const double s = (rng.coin() ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - c * c));
    out[0] = c * mean_direction[0] - s * mean_direction[1];
    out[1] = c * mean_direction[1] + s * mean_direction[0];
    return;
  }
  const double w = wood_cosine(static_cast<int>(dim), kappa, rng);
  // Tangent direction: a Gaussian vector with its mu-component removed.
  double length = 0.0;
  do {
    double along = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
      out[a] = rng.normal();
      along += out[a] * mean_direction[a];
    }
    for (std::size_t a = 0; a < dim; ++a) {
      out[a] -= along * mean_direction[a];
    }
    length = norm(out);
  } while (length < 1e-150);
  const double tangent = std::sqrt(std::max(0.0, 1.0 - w * w)) / length;
  for (std::size_t a = 0; a < dim; ++a) {
    out[a] = w * mean_direction[a] + tangent * out[a];
  }
}

void conditional_update(SpinConfiguration& config, std::size_t i, double beta,
                        RandomStream& rng) {
  if (i >= config.sites()) {
    throw std::out_of_range("conditional_update: site index out of range");
  }
  const int dim = config.spin_dim();
  double field[kMaxSpinDim];
  double fresh[kMaxSpinDim];
  const auto total = config.total_spin();
  const auto current = config.spin(i);
  double length = 0.0;
  for (int a = 0; a < dim; ++a) {
    field[a] = total[a] - current[a];
    length += field[a] * field[a];
  }
  length = std::sqrt(length);
  const double kappa = beta * length / static_cast<double>(config.sites());
  if (length > 0.0) {
    for (int a = 0; a < dim; ++a) {
      field[a] /= length;
    }
  }
  const auto d = static_cast<std::size_t>(dim);
  sample_von_mises_fisher({field, d}, length > 0.0 ? kappa : 0.0, rng, {fresh, d});
  config.set_spin(i, {fresh, d});
}

void glauber_sweep(SpinConfiguration& config, double beta, RandomStream& rng) {
  const std::size_t n = config.sites();
  for (std::size_t step = 0; step < n; ++step) {
    conditional_update(config, rng.index(n), beta, rng);
  }
  config.finish_sweep();
}

double energy(const SpinConfiguration& config) {
  const double s = norm(config.total_spin());
  return -s * s / (2.0 * static_cast<double>(config.sites()));
}

ChainOutput run_chain(const ModelParams& params, const SamplerConfig& config) {
  params.validate();
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  ChainOutput output;
  output.params = params;
  output.config = config;

  RandomStream rng(config.seed, config.chain_id);
  try {
    auto state = config.init == InitKind::aligned
                     ? SpinConfiguration::aligned(params.spin_dim, params.sites)
                     : SpinConfiguration::uniform(params.spin_dim, params.sites, rng);
    for (std::uint64_t sweep = 0; sweep < config.burn_in_sweeps; ++sweep) {
      glauber_sweep(state, params.beta, rng);
    }
    const std::uint64_t records = config.sweeps / config.thin;
    output.sweep_index.reserve(records);
    output.energies.reserve(records);
    output.totals.reserve(records * static_cast<std::size_t>(params.spin_dim));
    for (std::uint64_t sweep = 1; sweep <= config.sweeps; ++sweep) {
      glauber_sweep(state, params.beta, rng);
      if (sweep % config.thin != 0) {
        continue;
      }
      output.sweep_index.push_back(sweep);
      const auto total = state.total_spin();
      output.totals.insert(output.totals.end(), total.begin(), total.end());
      output.energies.push_back(energy(state));
      if (config.snapshot_every > 0 && output.size() % config.snapshot_every == 0) {
        output.snapshots.push_back(state);
      }
    }
  } catch (const std::bad_alloc&) {
    output.complete = false;
    output.error = "allocation failed; records truncated";
    // Drop a half-written record so the three arrays stay aligned.
    const std::size_t kept = std::min(output.sweep_index.size(), output.energies.size());
    output.sweep_index.resize(kept);
    output.energies.resize(kept);
    output.totals.resize(kept * static_cast<std::size_t>(params.spin_dim));
  }
  output.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return output;
}

std::vector<ChainOutput> run_chains(const ModelParams& params, const SamplerConfig& config,
                                    std::size_t chains, unsigned threads) {
  std::vector<ChainOutput> outputs(chains);
  const auto run_one = [&](std::size_t k) {
    SamplerConfig chain_config = config;
    chain_config.chain_id = config.chain_id + k;
    outputs[k] = run_chain(params, chain_config);
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), chains));
  if (workers <= 1) {
    for (std::size_t k = 0; k < chains; ++k) {
      run_one(k);
    }
    return outputs;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < chains; k = next++) {
        run_one(k);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  return outputs;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("MEANFIELD_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) {
      return static_cast<unsigned>(value);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_records_csv(const ChainOutput& output, std::ostream& out) {
  const int dim = output.params.spin_dim;
  out << "sweep";
  for (int a = 1; a <= dim; ++a) {
    out << ",s_" << a;
  }
  out << ",energy\n";
  for (std::size_t k = 0; k < output.size(); ++k) {
    out << output.sweep_index[k];
    for (double s : output.total_spin(k)) {
      out << ',' << io::format_double(s);
    }
    out << ',' << io::format_double(output.energies[k]) << '\n';
  }
}

} // namespace meanfield::sampler
