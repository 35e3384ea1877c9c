#pragma once

// Statistics of chain output: the regime-specific rescalings W_n of the
// total spin, empirical distribution distances, moment accumulators and
// autocorrelation-based effective sample sizes.

#include "meanfield/sampler.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace meanfield::stats {

using Cdf = std::function<double(double)>;
using Quantile = std::function<double(double)>;

/// Running mean and covariance (Chan et al. pairwise update).
class MomentAccumulator {
public:
  explicit MomentAccumulator(std::size_t dim);

  void add(std::span<const double> x);
  /// Combines with the summary of a disjoint block of samples.
  void merge(const MomentAccumulator& other);

  std::size_t dim() const { return dim_; }
  std::uint64_t count() const { return count_; }
  const std::vector<double>& mean() const { return mean_; }
  /// Unbiased covariance, row-major dim x dim (zero for count < 2).
  std::vector<double> covariance() const;

private:
  std::size_t dim_;
  std::uint64_t count_ = 0;
  std::vector<double> mean_;
  std::vector<double> comoment_;
};

struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
};

/// Freedman-Diaconis bin edges covering [min, max] of the samples.
std::vector<double> freedman_diaconis_edges(std::span<const double> samples);
/// Counts per bin; values outside [edges.front(), edges.back()] go to the
/// end bins, so the counts always sum to the sample size.
Histogram make_histogram(std::span<const double> samples, std::vector<double> edges);

struct EssResult {
  double value = 0.0;
  bool degenerate = false;  ///< series had zero variance
};

/// m / (1 + 2 sum_k rho_k) with Geyer's initial positive (monotone)
/// sequence truncation, capped at 10 m. Needs at least 10 points.
EssResult effective_sample_size(std::span<const double> series);

/// sup |F_m - F| over a sorted sample, evaluated on both sides of each step.
double ks_distance(std::span<const double> sorted_samples, const Cdf& cdf);

/// (1/m) sum |x_(i) - q((i - 1/2)/m)|.
double wasserstein1(std::span<const double> samples, const Quantile& quantile);

double normal_cdf(double x, double mean = 0.0, double sd = 1.0);
double normal_quantile(double p, double mean = 0.0, double sd = 1.0);

enum class Regime { subcritical, supercritical, critical };

struct RegimeStatistic {
  Regime regime;
  std::vector<double> value;  ///< N entries below beta_c, one otherwise
  std::size_t sites;
  int spin_dim;
  double beta;
};

/// sqrt((N - beta) / n) S_n, for 0 <= beta < N.
std::vector<double> w_subcritical(std::span<const double> total_spin, std::size_t sites,
                                  int spin_dim, double beta);

/// sqrt(n) [beta^2 |S_n|^2 / (n^2 b^2) - 1], b = g_2^{-1}(beta).
double w_supercritical(std::span<const double> total_spin, std::size_t sites, double beta,
                       double b);

/// c |S_n|^2 / n^{3/2}.
double w_critical(std::span<const double> total_spin, std::size_t sites, double c);

/// {<sigma_i, direction>}_i; direction must have unit norm.
std::vector<double> projection_samples(const sampler::SpinConfiguration& config,
                                       std::span<const double> direction);

/// Summary of one scalar or vector time series, as exported to JSON.
struct EmpiricalSummary {
  std::uint64_t count = 0;
  std::vector<double> mean;
  std::vector<double> cov;
  std::vector<double> ess;
  std::optional<double> ks;
  std::optional<double> w1;
  Histogram histogram;

  nlohmann::json to_json() const;
};

/// Summary of record-major vectors of dimension dim. The histogram is built
/// from component `histogram_component`.
EmpiricalSummary summarize(std::span<const double> records, std::size_t dim,
                           std::size_t histogram_component);

/// Standard error of a mean: sqrt(variance / ess), with ESS summed over chains.
double pooled_standard_error(double variance, double total_ess);

double mean(std::span<const double> x);
double variance(std::span<const double> x);

} // namespace meanfield::stats
