#include "meanfield/stats.hpp"

#include "meanfield/errors.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace meanfield::stats {

MomentAccumulator::MomentAccumulator(std::size_t dim)
    : dim_(dim), mean_(dim, 0.0), comoment_(dim * dim, 0.0) {
  if (dim == 0) {
    throw std::domain_error("MomentAccumulator: dimension must be >= 1");
  }
}

void MomentAccumulator::add(std::span<const double> x) {
  if (x.size() != dim_) {
    throw std::invalid_argument("MomentAccumulator::add: dimension mismatch");
  }
  ++count_;
  const double inv = 1.0 / static_cast<double>(count_);
  std::vector<double> before(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    before[a] = x[a] - mean_[a];
    mean_[a] += before[a] * inv;
  }
  for (std::size_t a = 0; a < dim_; ++a) {
    const double after = x[a] - mean_[a];
    for (std::size_t b = 0; b < dim_; ++b) {
      comoment_[a * dim_ + b] += after * before[b];
    }
  }
  // Symmetrise to keep round-off from breaking cov = cov^T.
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = a + 1; b < dim_; ++b) {
      const double avg = 0.5 * (comoment_[a * dim_ + b] + comoment_[b * dim_ + a]);
      comoment_[a * dim_ + b] = avg;
      comoment_[b * dim_ + a] = avg;
    }
  }
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("MomentAccumulator::merge: dimension mismatch");
  }
  if (other.count_ == 0) {
    return;
  }
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double total = na + nb;
  std::vector<double> delta(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    delta[a] = other.mean_[a] - mean_[a];
  }
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      comoment_[a * dim_ + b] +=
          other.comoment_[a * dim_ + b] + delta[a] * delta[b] * na * nb / total;
    }
  }
  for (std::size_t a = 0; a < dim_; ++a) {
    mean_[a] = (na * mean_[a] + nb * other.mean_[a]) / total;
  }
  count_ += other.count_;
}

std::vector<double> MomentAccumulator::covariance() const {
  std::vector<double> cov(dim_ * dim_, 0.0);
  if (count_ < 2) {
    return cov;
  }
  const double inv = 1.0 / static_cast<double>(count_ - 1);
  for (std::size_t k = 0; k < cov.size(); ++k) {
    cov[k] = comoment_[k] * inv;
  }
  return cov;
}

std::vector<double> freedman_diaconis_edges(std::span<const double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("freedman_diaconis_edges: empty sample");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  if (hi == lo) {
    return {lo - 0.5, lo + 0.5};
  }
  const auto quantile = [&](double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto below = static_cast<std::size_t>(pos);
    const std::size_t above = std::min(below + 1, sorted.size() - 1);
    return sorted[below] + (pos - below) * (sorted[above] - sorted[below]);
  };
  const double iqr = quantile(0.75) - quantile(0.25);
  double width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
  std::size_t bins = 1;
  if (width > 0.0) {
    bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
  }
  bins = std::clamp<std::size_t>(bins, 1, 10000);
  std::vector<double> edges(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) {
    edges[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
  }
  return edges;
}

Histogram make_histogram(std::span<const double> samples, std::vector<double> edges) {
  if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end())) {
    throw std::invalid_argument("make_histogram: need at least two increasing edges");
  }
  Histogram hist;
  hist.counts.assign(edges.size() - 1, 0);
  for (double x : samples) {
    auto it = std::upper_bound(edges.begin(), edges.end(), x);
    std::size_t bin = it == edges.begin() ? 0 : static_cast<std::size_t>(it - edges.begin()) - 1;
    bin = std::min(bin, hist.counts.size() - 1);
    ++hist.counts[bin];
  }
  hist.edges = std::move(edges);
  return hist;
}

EssResult effective_sample_size(std::span<const double> series) {
  const std::size_t m = series.size();
  if (m < 10) {
    throw std::invalid_argument("effective_sample_size: need at least 10 points");
  }
  const double md = static_cast<double>(m);
  const double xbar = mean(series);
  std::vector<double> centred(m);
  for (std::size_t t = 0; t < m; ++t) {
    centred[t] = series[t] - xbar;
  }
  const auto autocov = [&](std::size_t lag) {
    double sum = 0.0;
    for (std::size_t t = 0; t + lag < m; ++t) {
      sum += centred[t] * centred[t + lag];
    }
    return sum / md;
  };
  const double gamma0 = autocov(0);
  if (!(gamma0 > 0.0)) {
    return {md, true};
  }
  // tau = -1 + 2 sum_k Gamma_k, Gamma_k = rho(2k) + rho(2k+1), summed while
  // positive and forced non-increasing.
  double sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; 2 * k + 1 < m; ++k) {
    double pair = (autocov(2 * k) + autocov(2 * k + 1)) / gamma0;
    if (!(pair > 0.0)) {
      break;
    }
    pair = std::min(pair, previous);
    previous = pair;
    sum += pair;
  }
  const double tau = -1.0 + 2.0 * sum;
  const double cap = 10.0 * md;
  if (!(tau > md / cap)) {
    return {cap, false};
  }
  return {md / tau, false};
}

double ks_distance(std::span<const double> sorted_samples, const Cdf& cdf) {
  if (sorted_samples.empty()) {
    throw std::invalid_argument("ks_distance: empty sample");
  }
  const double m = static_cast<double>(sorted_samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double f = cdf(sorted_samples[i]);
    const double above = static_cast<double>(i + 1) / m - f;
    const double below = f - static_cast<double>(i) / m;
    worst = std::max({worst, above, below});
  }
  return std::clamp(worst, 0.0, 1.0);
}

double wasserstein1(std::span<const double> samples, const Quantile& quantile) {
  if (samples.empty()) {
    throw std::invalid_argument("wasserstein1: empty sample");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    sum += std::abs(sorted[i] - quantile((static_cast<double>(i) + 0.5) / m));
  }
  return sum / m;
}

double normal_cdf(double x, double mean, double sd) {
  return boost::math::cdf(boost::math::normal_distribution<double>(mean, sd), x);
}

double normal_quantile(double p, double mean, double sd) {
  return boost::math::quantile(boost::math::normal_distribution<double>(mean, sd), p);
}

std::vector<double> w_subcritical(std::span<const double> total_spin, std::size_t sites,
                                  int spin_dim, double beta) {
  if (!(beta >= 0.0 && beta < spin_dim)) {
    throw precondition_error("w_subcritical: requires 0 <= beta < N");
  }
  const double scale = std::sqrt((spin_dim - beta) / static_cast<double>(sites));
  std::vector<double> w(total_spin.begin(), total_spin.end());
  for (double& x : w) {
    x *= scale;
  }
  return w;
}

double w_supercritical(std::span<const double> total_spin, std::size_t sites, double beta,
                       double b) {
  if (!(b > 0.0)) {
    throw std::domain_error("w_supercritical: b must be > 0");
  }
  double s2 = 0.0;
  for (double x : total_spin) {
    s2 += x * x;
  }
  const double n = static_cast<double>(sites);
  return std::sqrt(n) * (beta * beta * s2 / (n * n * b * b) - 1.0);
}

double w_critical(std::span<const double> total_spin, std::size_t sites, double c) {
  double s2 = 0.0;
  for (double x : total_spin) {
    s2 += x * x;
  }
  const double n = static_cast<double>(sites);
  return c * s2 / std::pow(n, 1.5);
}

std::vector<double> projection_samples(const sampler::SpinConfiguration& config,
                                       std::span<const double> direction) {
  if (direction.size() != static_cast<std::size_t>(config.spin_dim())) {
    throw std::domain_error("projection_samples: direction has wrong dimension");
  }
  double length = 0.0;
  for (double x : direction) {
    length += x * x;
  }
  if (std::abs(std::sqrt(length) - 1.0) > 1e-9) {
    throw std::domain_error("projection_samples: direction must be a unit vector");
  }
  std::vector<double> out(config.sites());
  for (std::size_t i = 0; i < config.sites(); ++i) {
    const auto s = config.spin(i);
    double dot = 0.0;
    for (std::size_t a = 0; a < direction.size(); ++a) {
      dot += s[a] * direction[a];
    }
    out[i] = dot;
  }
  return out;
}

nlohmann::json EmpiricalSummary::to_json() const {
  nlohmann::json j;
  j["count"] = count;
  j["mean"] = mean;
  j["cov"] = cov;
  j["ess"] = ess;
  j["ks"] = ks ? nlohmann::json(*ks) : nlohmann::json(nullptr);
  j["w1"] = w1 ? nlohmann::json(*w1) : nlohmann::json(nullptr);
  j["histogram"] = {{"edges", histogram.edges}, {"counts", histogram.counts}};
  return j;
}

EmpiricalSummary summarize(std::span<const double> records, std::size_t dim,
                           std::size_t histogram_component) {
  if (dim == 0 || records.size() % dim != 0) {
    throw std::invalid_argument("summarize: records not a multiple of dim");
  }
  if (histogram_component >= dim) {
    throw std::out_of_range("summarize: histogram component out of range");
  }
  const std::size_t count = records.size() / dim;
  MomentAccumulator acc(dim);
  for (std::size_t k = 0; k < count; ++k) {
    acc.add(records.subspan(k * dim, dim));
  }
  EmpiricalSummary summary;
  summary.count = acc.count();
  summary.mean = acc.mean();
  summary.cov = acc.covariance();
  std::vector<double> component(count);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t k = 0; k < count; ++k) {
      component[k] = records[k * dim + a];
    }
    if (count >= 10) {
      summary.ess.push_back(effective_sample_size(component).value);
    } else {
      summary.ess.push_back(static_cast<double>(count));
    }
  }
  if (count > 0) {
    for (std::size_t k = 0; k < count; ++k) {
      component[k] = records[k * dim + histogram_component];
    }
    summary.histogram = make_histogram(component, freedman_diaconis_edges(component));
  }
  return summary;
}

double pooled_standard_error(double variance, double total_ess) {
  return std::sqrt(variance / total_ess);
}

double mean(std::span<const double> x) {
  if (x.empty()) {
    throw std::invalid_argument("mean: empty input");
  }
  double sum = 0.0;
  for (double v : x) {
    sum += v;
  }
  return sum / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
  if (x.size() < 2) {
    throw std::invalid_argument("variance: need at least two points");
  }
  const double xbar = mean(x);
  double sum = 0.0;
  for (double v : x) {
    sum += (v - xbar) * (v - xbar);
  }
  return sum / static_cast<double>(x.size() - 1);
}

} // namespace meanfield::stats
