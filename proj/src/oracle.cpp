#include "meanfield/oracle.hpp"

#include "meanfield/errors.hpp"
#include "meanfield/quadrature.hpp"
#include "meanfield/theory.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meanfield::oracle {

namespace {

constexpr double kSeriesLimit = 60.0;

// I_nu(x) for nu >= -1/2 by the defining series.
long double series(long double nu, long double x, long double tol) {
  if (x > kSeriesLimit) {
    throw oracle_domain_error("bessel_series: x > 60, use an asymptotic check instead");
  }
  if (x == 0.0L) {
    if (nu == 0.0L) {
      return 1.0L;
    }
    return nu > 0.0L ? 0.0L : std::numeric_limits<long double>::infinity();
  }
  const long double half = 0.5L * x;
  long double term = std::pow(half, nu) / std::tgamma(nu + 1.0L);
  long double sum = term;
  const long double q = half * half;
  for (int m = 1; m < 100000; ++m) {
    term *= q / (static_cast<long double>(m) * (m + nu));
    sum += term;
    if (term < tol * sum) {
      return sum;
    }
  }
  throw std::runtime_error("bessel_series: no convergence");
}

} // namespace

double bessel_series(specfun::Order nu, double x, double tol) {
  if (!(x >= 0.0)) {
    throw std::domain_error("bessel_series: x must be >= 0");
  }
  if (!(tol >= 1e-19)) {
    throw std::domain_error("bessel_series: tolerance too small");
  }
  return static_cast<double>(series(nu.value(), x, tol));
}

double bessel_ratio_series(specfun::Order nu, double x) {
  if (nu.twice() < 1) {
    throw std::domain_error("bessel_ratio_series: order must be >= 1/2");
  }
  if (x == 0.0) {
    return 0.0;
  }
  const long double v = nu.value();
  return static_cast<double>(series(v, x, 1e-19L) / series(v - 1.0L, x, 1e-19L));
}

double g_inverse_bisection(int spin_dim, double beta) {
  if (spin_dim < 1) {
    throw std::domain_error("g_inverse_bisection: N must be >= 1");
  }
  const auto order = specfun::Order::half_dimension(spin_dim);
  const auto g = [&](double r) { return r / bessel_ratio_series(order, r); };
  double lo = 1e-8;
  double hi = 50.0;
  if (!(g(lo) < beta && g(hi) > beta)) {
    throw oracle_domain_error("g_inverse_bisection: root not bracketed by [1e-8, 50]");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < beta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CurieWeissExact curie_weiss_exact(int sites, double beta) {
  if (sites < 1 || sites > 20) {
    throw oracle_domain_error("curie_weiss_exact: need 1 <= n <= 20");
  }
  if (!(beta >= 0.0)) {
    throw std::domain_error("curie_weiss_exact: beta must be >= 0");
  }
  const std::uint32_t states = 1u << sites;
  const double n = sites;
  // Accumulate by S value so that P(s) and P(-s) are built from the same
  // floating point weights.
  std::vector<double> weight_by_s(2 * sites + 1, 0.0);
  double pair_weight = 0.0;
  for (std::uint32_t mask = 0; mask < states; ++mask) {
    const int up = std::popcount(mask);
    const int s = 2 * up - sites;
    const double w = std::exp(beta / (2.0 * n) * s * s);
    weight_by_s[s + sites] += w;
    if (sites >= 2) {
      const int s1 = (mask & 1u) ? 1 : -1;
      const int s2 = (mask & 2u) ? 1 : -1;
      pair_weight += s1 * s2 * w;
    }
  }
  CurieWeissExact result;
  double z = 0.0;
  double s2 = 0.0;
  for (int s = -sites; s <= sites; ++s) {
    z += weight_by_s[s + sites];
    s2 += static_cast<double>(s) * s * weight_by_s[s + sites];
  }
  result.partition_function = z;
  result.mean_s2 = s2 / z;
  result.pair_correlation = sites >= 2 ? pair_weight / z : 0.0;
  for (int s = -sites; s <= sites; ++s) {
    if (weight_by_s[s + sites] > 0.0) {
      result.distribution.emplace_back(s, weight_by_s[s + sites] / z);
    }
  }
  return result;
}

XyQuadrature xy_quadrature(int sites, double beta, int grid) {
  if (sites < 2 || sites > 4) {
    throw oracle_domain_error("xy_quadrature: need 2 <= n <= 4");
  }
  if (grid < 64) {
    throw std::domain_error("xy_quadrature: need at least 64 grid points per angle");
  }
  const double n = sites;
  std::vector<double> c(grid);
  std::vector<double> s(grid);
  for (int k = 0; k < grid; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid;
    c[k] = std::cos(theta);
    s[k] = std::sin(theta);
  }
  const int free_angles = sites - 1;
  std::vector<int> idx(free_angles, 0);
  double z = 0.0;
  double s2_sum = 0.0;
  double pair_sum = 0.0;
  const double shift = n * n;
  for (;;) {
    double sx = 1.0;
    double sy = 0.0;
    for (int a = 0; a < free_angles; ++a) {
      sx += c[idx[a]];
      sy += s[idx[a]];
    }
    const double s2 = sx * sx + sy * sy;
    const double w = std::exp(beta / (2.0 * n) * (s2 - shift));
    z += w;
    s2_sum += w * s2;
    pair_sum += w * c[idx[0]];
    int a = 0;
    while (a < free_angles && ++idx[a] == grid) {
      idx[a] = 0;
      ++a;
    }
    if (a == free_angles) {
      break;
    }
  }
  return {s2_sum / z, pair_sum / z};
}

GridMinimum phi_grid_minimize(int spin_dim, double beta, double r_max, std::size_t steps) {
  if (!(beta >= 0.0)) {
    throw std::domain_error("phi_grid_minimize: beta must be >= 0");
  }
  if (!(r_max >= 10.0) || steps < 100000) {
    throw std::domain_error("phi_grid_minimize: need r_max >= 10 and steps >= 1e5");
  }
  const auto phi = [&](double r) { return theory::phi_functional(spin_dim, beta, r); };
  const double h = r_max / static_cast<double>(steps);
  std::size_t best = 0;
  double best_value = phi(0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double value = phi(h * static_cast<double>(k));
    if (value < best_value) {
      best_value = value;
      best = k;
    }
  }
  if (best == 0) {
    return {0.0, best_value};
  }

  double a = h * static_cast<double>(best - 1);
  double b = h * static_cast<double>(std::min(best + 1, steps));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = phi(x1);
  double f2 = phi(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = phi(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = phi(x2);
    }
  }
  double r = 0.5 * (a + b);

  // Phi is flat to O(delta^2) at the minimum, so golden section alone stalls
  // near sqrt(machine epsilon). Newton steps on central differences of Phi
  // resolve the stationary point to ~1e-11.
  constexpr double kStep = 1e-4;
  if (r > 2.0 * kStep) {
    for (int it = 0; it < 6; ++it) {
      const double fp = phi(r + kStep);
      const double f0 = phi(r);
      const double fm = phi(r - kStep);
      const double d2 = (fp - 2.0 * f0 + fm) / (kStep * kStep);
      if (!(d2 > 0.0)) {
        break;
      }
      const double step = (fp - fm) / (2.0 * kStep) / d2;
      r -= step;
      if (std::abs(step) < 1e-13) {
        break;
      }
    }
  }
  return {r, phi(r)};
}

double critical_moment_oracle(int spin_dim, int order) {
  if (spin_dim < 1) {
    throw std::domain_error("critical_moment_oracle: N must be >= 1");
  }
  if (order < 1 || order > 4) {
    throw std::domain_error("critical_moment_oracle: order must be in {1, 2, 3, 4}");
  }
  const double n = spin_dim;
  const double k = 1.0 / (n * n * (4.0 * n + 8.0));
  // t = u^2: t^j p(t) dt  ->  2 u^{2j + N - 1} e^{-k u^4} du.
  const auto weight = [k](int power) {
    return [k, power](double u) {
      const double u2 = u * u;
      return 2.0 * std::pow(u, power) * std::exp(-k * u2 * u2);
    };
  };
  const double mass = quadrature::integrate_to_infinity(weight(spin_dim - 1), 0.0);
  const double moment = quadrature::integrate_to_infinity(weight(2 * order + spin_dim - 1), 0.0);
  return moment / mass;
}

nlohmann::json generate_golden() {
  using nlohmann::json;
  json table = json::array();
  const auto add = [&](std::string name, json params, double value, std::string oracle,
                       double tolerance) {
    table.push_back({{"name", std::move(name)},
                     {"params", std::move(params)},
                     {"value", value},
                     {"oracle", std::move(oracle)},
                     {"tolerance", tolerance}});
  };

  for (int twice : {0, 1, 2, 3, 4}) {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
      add("bessel_i", {{"twice_nu", twice}, {"x", x}},
          bessel_series(specfun::Order::from_twice(twice), x), "bessel_series", 1e-12);
    }
  }
  for (int twice : {2, 3, 4}) {
    for (double x : {0.001, 0.5, 2.0, 10.0}) {
      add("bessel_ratio", {{"twice_nu", twice}, {"x", x}},
          bessel_ratio_series(specfun::Order::from_twice(twice), x), "bessel_series", 1e-12);
    }
  }
  const std::pair<int, double> roots[] = {{1, 2.0}, {2, 3.0}, {3, 4.0}, {4, 5.0}, {2, 5.0}};
  for (const auto& [dim, beta] : roots) {
    add("g_inverse", {{"spin_dim", dim}, {"beta", beta}}, g_inverse_bisection(dim, beta),
        "g_inverse_bisection", 1e-9);
  }
  {
    const double r = g_inverse_bisection(3, 4.0);
    add("magnetization", {{"spin_dim", 3}, {"beta", 4.0}}, 1.0 / std::tanh(r) - 1.0 / r,
        "coth(r) - 1/r at bisection root", 1e-9);
  }
  {
    const double b = g_inverse_bisection(2, 3.0);
    const double f = bessel_ratio_series(specfun::Order::from_twice(2), b);
    const double fprime = 1.0 - f / b - f * f;
    add("supercritical_variance", {{"beta", 3.0}},
        4.0 * 9.0 * fprime / ((1.0 - 3.0 * fprime) * b * b), "series Bessel values", 1e-8);
  }
  const std::pair<int, double> minima[] = {{2, 3.0}, {3, 4.0}, {4, 5.0}};
  for (const auto& [dim, beta] : minima) {
    const auto grid = phi_grid_minimize(dim, beta, 20.0, 200000);
    add("free_energy", {{"spin_dim", dim}, {"beta", beta}}, grid.min_value,
        "phi_grid_minimize", 1e-8);
  }
  for (double beta : {0.5, 1.5}) {
    add("curie_weiss_mean_s2", {{"sites", 10}, {"beta", beta}},
        curie_weiss_exact(10, beta).mean_s2, "curie_weiss_exact", 1e-12);
  }
  for (double beta : {0.5, 1.0, 2.0, 3.0}) {
    add("xy_mean_s2", {{"sites", 3}, {"beta", beta}, {"grid", 256}},
        xy_quadrature(3, beta, 256).mean_s2, "xy_quadrature", 1e-11);
  }
  for (int dim : {1, 2, 3, 4}) {
    add("critical_second_moment", {{"spin_dim", dim}}, critical_moment_oracle(dim, 2),
        "critical_moment_oracle", 1e-10);
  }
  return table;
}

} // namespace meanfield::oracle
