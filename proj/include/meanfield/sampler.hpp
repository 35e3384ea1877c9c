#pragma once

// Glauber dynamics (random-scan Gibbs sampling) for the mean-field O(N)
// model with Hamiltonian H_n = -|S_n|^2 / (2n).
//
// The full conditional of one spin given the others is von Mises-Fisher
// with mean direction S_n - sigma_i and concentration
// kappa = (beta / n) |S_n - sigma_i|.

#include "meanfield/model.hpp"
#include "meanfield/random.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace meanfield::sampler {

class SpinConfiguration {
public:
  /// All spins along the first coordinate axis.
  static SpinConfiguration aligned(int spin_dim, std::size_t sites);
  /// Independent uniform spins on S^{N-1}.
  static SpinConfiguration uniform(int spin_dim, std::size_t sites, RandomStream& rng);

  int spin_dim() const { return spin_dim_; }
  std::size_t sites() const { return sites_; }

  std::span<const double> spin(std::size_t i) const {
    return {spins_.data() + i * spin_dim_, static_cast<std::size_t>(spin_dim_)};
  }
  /// Incrementally maintained S_n.
  std::span<const double> total_spin() const { return total_; }
  std::span<const double> raw() const { return spins_; }

  /// Replaces spin i by value / |value| and updates the running total.
  void set_spin(std::size_t i, std::span<const double> value);

  /// Rebuilds S_n from scratch.
  void recompute_total();
  /// |cached S_n - fresh sum of spins|.
  double total_drift() const;
  /// max_i | |sigma_i| - 1 |.
  double max_norm_deviation() const;

  /// Counts completed sweeps; the cached total is rebuilt every 64.
  void finish_sweep();

private:
  SpinConfiguration(int spin_dim, std::size_t sites);

  int spin_dim_;
  std::size_t sites_;
  std::vector<double> spins_;
  std::vector<double> total_;
  std::uint64_t sweeps_ = 0;
};

enum class InitKind { uniform, aligned };

struct SamplerConfig {
  std::uint64_t sweeps = 1000;
  std::uint64_t burn_in_sweeps = 200;
  std::uint64_t thin = 5;
  std::uint64_t seed = 1;
  std::uint64_t chain_id = 0;
  InitKind init = InitKind::uniform;
  /// Store a full configuration every this many records (0 = never).
  std::uint64_t snapshot_every = 0;

  void validate() const;
};

/// Per-chain time series. Record k holds the sweep index, S_n and H_n.
struct ChainOutput {
  ModelParams params;
  SamplerConfig config;
  std::vector<std::uint64_t> sweep_index;
  std::vector<double> totals;  ///< record-major, N entries per record
  std::vector<double> energies;
  std::vector<SpinConfiguration> snapshots;
  double wall_seconds = 0.0;
  bool complete = true;
  std::string error;

  std::size_t size() const { return energies.size(); }
  std::span<const double> total_spin(std::size_t k) const {
    const auto n = static_cast<std::size_t>(params.spin_dim);
    return {totals.data() + k * n, n};
  }
};

/// Draws a unit vector from the von Mises-Fisher law with the given unit
/// mean direction and concentration kappa >= 0 (kappa = 0 is uniform).
void sample_von_mises_fisher(std::span<const double> mean_direction, double kappa,
                             RandomStream& rng, std::span<double> out);

/// Resamples spin i from its exact full conditional at inverse temperature beta.
void conditional_update(SpinConfiguration& config, std::size_t i, double beta,
                        RandomStream& rng);

/// n conditional updates at uniformly random sites.
void glauber_sweep(SpinConfiguration& config, double beta, RandomStream& rng);

/// H_n = -|S_n|^2 / (2n).
double energy(const SpinConfiguration& config);

/// Initialises, discards burn-in and records every thin-th sweep. A failed
/// allocation stops the chain and returns what was recorded so far with
/// complete = false.
ChainOutput run_chain(const ModelParams& params, const SamplerConfig& config);

/// Runs chains with ids config.chain_id, config.chain_id + 1, ... on up to
/// `threads` workers. The result is ordered by chain id and independent of
/// the thread count.
std::vector<ChainOutput> run_chains(const ModelParams& params, const SamplerConfig& config,
                                    std::size_t chains, unsigned threads);

/// Worker count from MEANFIELD_THREADS, else the hardware concurrency.
unsigned default_thread_count();

/// CSV with header sweep,s_1,...,s_N,energy.
void write_records_csv(const ChainOutput& output, std::ostream& out);

} // namespace meanfield::sampler
