#include "meanfield/theory.hpp"

#include "meanfield/errors.hpp"
#include "meanfield/quadrature.hpp"
#include "meanfield/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace meanfield::theory {

namespace sf = meanfield::specfun;

namespace {

void require_dimension(int spin_dim) {
  if (spin_dim < 1) {
    throw std::domain_error("spin dimension must be >= 1");
  }
}

double ratio(int spin_dim, double r) {
  return sf::bessel_ratio(sf::Order::half_dimension(spin_dim), r);
}

double ratio_derivative(int spin_dim, double r) {
  return sf::bessel_ratio_derivative(sf::Order::half_dimension(spin_dim), r);
}

// log[(A_N / A_{N-1}) r^{N/2-1} / (B_N pi I_{N/2-1}(r))] for r > 0.
//
// For N = 1 the sphere S^0 has A_0 = 0 and B_1 is undefined; the same
// quantity is then the log-normaliser of the two-point tilt, -log cosh r.
double log_normaliser_term(int spin_dim, double r) {
  if (spin_dim == 1) {
    return -(r + std::log1p(std::exp(-2.0 * r)) - std::numbers::ln2);
  }
  const double constant =
      std::log(sf::sphere_area(spin_dim) /
               (sf::sphere_area(spin_dim - 1) * sf::b_constant(spin_dim) * std::numbers::pi));
  const double order = 0.5 * spin_dim - 1.0;
  const double power = order == 0.0 ? 0.0 : order * std::log(r);
  return constant + power - sf::log_bessel_i(sf::Order::from_twice(spin_dim - 2), r);
}

} // namespace

double g(int spin_dim, double r) {
  require_dimension(spin_dim);
  if (!(r > 0.0)) {
    throw std::domain_error("g: r must be > 0");
  }
  return r / ratio(spin_dim, r);
}

double g_inverse(int spin_dim, double beta) {
  require_dimension(spin_dim);
  const double n = spin_dim;
  if (!(beta >= n)) {
    throw precondition_error("g_inverse: subcritical (beta < N), no positive solution");
  }
  if (beta == n) {
    return 0.0;
  }
  // g is increasing with g(0+) = N and g(r) > r, so the root lies in (0, beta].
  double lo = 0.0;
  double hi = beta;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      break;
    }
    if (g(spin_dim, mid) < beta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double r = 0.5 * (lo + hi);
  for (int step = 0; step < 2; ++step) {
    const double rr = ratio(spin_dim, r);
    const double slope = 1.0 / rr - r * ratio_derivative(spin_dim, r) / (rr * rr);
    const double next = r - (r / rr - beta) / slope;
    if (next > 0.0 && std::isfinite(next)) {
      r = next;
    }
  }
  return r;
}

double phi_functional(int spin_dim, double beta, double r) {
  require_dimension(spin_dim);
  if (!(r >= 0.0)) {
    throw std::domain_error("phi_functional: r must be >= 0");
  }
  if (r == 0.0) {
    return 0.0;
  }
  const double m = ratio(spin_dim, r);
  return r * m + log_normaliser_term(spin_dim, r) - 0.5 * beta * m * m;
}

double free_energy(int spin_dim, double beta) {
  require_dimension(spin_dim);
  if (!(beta >= 0.0)) {
    throw std::domain_error("free_energy: beta must be >= 0");
  }
  if (beta <= spin_dim) {
    return 0.0;
  }
  return std::min(0.0, phi_functional(spin_dim, beta, g_inverse(spin_dim, beta)));
}

double magnetization(int spin_dim, double beta) {
  require_dimension(spin_dim);
  if (!(beta >= 0.0)) {
    throw std::domain_error("magnetization: beta must be >= 0");
  }
  if (beta <= spin_dim) {
    return 0.0;
  }
  return ratio(spin_dim, g_inverse(spin_dim, beta));
}

double rate_function(int spin_dim, double beta, double r) {
  return phi_functional(spin_dim, beta, r);
}

double normalized_rate(int spin_dim, double beta, double r) {
  return phi_functional(spin_dim, beta, r) - free_energy(spin_dim, beta);
}

double relative_entropy_exponential(double b) {
  if (!(b >= 0.0)) {
    throw std::domain_error("relative_entropy_exponential: b must be >= 0");
  }
  if (b == 0.0) {
    return 0.0;
  }
  return b * sf::bessel_ratio(sf::Order::from_twice(2), b) -
         sf::log_bessel_i(sf::Order::from_twice(0), b);
}

MacrostateProjection::MacrostateProjection(int spin_dim, double concentration)
    : spin_dim_(spin_dim), b_(concentration), norm_(1.0) {
  if (spin_dim < 2) {
    throw std::domain_error("MacrostateProjection: spin dimension must be >= 2");
  }
  if (!(concentration >= 0.0)) {
    throw std::domain_error("MacrostateProjection: concentration must be >= 0");
  }
  norm_ = quadrature::integrate([this](double t) { return theta_integrand(t); }, 0.0,
                                std::numbers::pi);
}

MacrostateProjection MacrostateProjection::at_beta(int spin_dim, double beta) {
  if (!(beta > spin_dim)) {
    throw precondition_error(
        "macrostate projection: beta <= N, the macrostate is uniform");
  }
  return MacrostateProjection(spin_dim, g_inverse(spin_dim, beta));
}

// sin^{N-2}(theta) e^{b (cos theta - 1)}: the projection law in the polar
// angle, with the e^{b} factor divided out.
double MacrostateProjection::theta_integrand(double theta) const {
  const double s = std::sin(theta);
  const double weight = spin_dim_ == 2 ? 1.0 : std::pow(s, spin_dim_ - 2);
  return weight * std::exp(b_ * (std::cos(theta) - 1.0));
}

double MacrostateProjection::density(double y) const {
  if (!(y >= -1.0 && y <= 1.0)) {
    throw std::domain_error("MacrostateProjection::density: y must lie in [-1, 1]");
  }
  const double exponent = 0.5 * (spin_dim_ - 3);
  const double one_minus = 1.0 - y * y;
  if (one_minus == 0.0 && exponent < 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  const double weight = exponent == 0.0 ? 1.0 : std::pow(one_minus, exponent);
  return weight * std::exp(b_ * (y - 1.0)) / norm_;
}

double MacrostateProjection::cdf(double y) const {
  if (y <= -1.0) {
    return 0.0;
  }
  if (y >= 1.0) {
    return 1.0;
  }
  const double theta = std::acos(y);
  const double mass = quadrature::integrate([this](double t) { return theta_integrand(t); },
                                            theta, std::numbers::pi);
  return std::clamp(mass / norm_, 0.0, 1.0);
}

double macrostate_projection_density(int spin_dim, double beta, double y) {
  return MacrostateProjection::at_beta(spin_dim, beta).density(y);
}

double supercritical_variance(double beta) {
  if (!(beta > 2.0)) {
    throw precondition_error("supercritical_variance: requires beta > 2");
  }
  const double b = g_inverse(2, beta);
  const auto order = sf::Order::from_twice(2);
  const double f = sf::bessel_ratio(order, b);
  const double fprime = sf::bessel_ratio_derivative(order, b);
  return 4.0 * beta * beta / ((1.0 - beta * fprime) * b * b) * (1.0 - f / b - f * f);
}

double critical_k(int spin_dim) {
  require_dimension(spin_dim);
  const double n = spin_dim;
  return 1.0 / (n * n * (4.0 * n + 8.0));
}

namespace {

// With t = u^2 the density becomes 2 u^{N-1} e^{-k u^4} du, which is smooth
// at the origin for every N >= 1.
double substituted_integrand(int spin_dim, double k, double u) {
  const double power = spin_dim == 1 ? 1.0 : std::pow(u, spin_dim - 1);
  const double u2 = u * u;
  return 2.0 * power * std::exp(-k * u2 * u2);
}

CriticalDensity build_critical_law(int spin_dim) {
  CriticalDensity law;
  law.spin_dim = spin_dim;
  law.k = critical_k(spin_dim);
  const double k = law.k;
  law.z_norm = quadrature::integrate_to_infinity(
      [spin_dim, k](double u) { return substituted_integrand(spin_dim, k, u); }, 0.0);
  return law;
}

} // namespace

double CriticalDensity::density(double t) const {
  if (t < 0.0) {
    return 0.0;
  }
  const double exponent = 0.5 * (spin_dim - 2);
  if (t == 0.0) {
    if (exponent < 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    return exponent == 0.0 ? 1.0 / z_norm : 0.0;
  }
  const double weight = exponent == 0.0 ? 1.0 : std::pow(t, exponent);
  return weight * std::exp(-k * t * t) / z_norm;
}

double CriticalDensity::cdf(double t) const {
  if (t <= 0.0) {
    return 0.0;
  }
  const int n = spin_dim;
  const double kk = k;
  const auto integrand = [n, kk](double u) { return substituted_integrand(n, kk, u); };
  const double upper = std::min(std::sqrt(t), quadrature::truncation_point(integrand, 0.0));
  return std::clamp(quadrature::integrate(integrand, 0.0, upper) / z_norm, 0.0, 1.0);
}

CriticalDensity critical_law(int spin_dim) {
  require_dimension(spin_dim);
  static std::mutex mutex;
  static std::map<int, CriticalDensity> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(spin_dim);
  if (it == cache.end()) {
    it = cache.emplace(spin_dim, build_critical_law(spin_dim)).first;
  }
  return it->second;
}

double critical_density(int spin_dim, double t) { return critical_law(spin_dim).density(t); }

double critical_cdf(int spin_dim, double t) { return critical_law(spin_dim).cdf(t); }

TheoryPoint theory_point(int spin_dim, double beta) {
  TheoryPoint point;
  point.beta = beta;
  if (beta > spin_dim) {
    point.r_star = g_inverse(spin_dim, beta);
    point.free_energy = free_energy(spin_dim, beta);
    point.magnetization = ratio(spin_dim, point.r_star);
    if (spin_dim == 2) {
      point.variance_v = supercritical_variance(beta);
    }
  }
  return point;
}

} // namespace meanfield::theory
