#include "meanfield/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meanfield::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 1000000;

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0)) {
    throw std::domain_error(std::string(what) + ": argument must be >= 0");
  }
}

// Series cutoff: the power series is used for x <= nu + 10, the
// continued-fraction/Wronskian path above it.
bool use_series(double nu, double x) { return x <= nu + 10.0; }

// (x/2)^nu / Gamma(nu + 1) * sum_m (x^2/4)^m / (m! (nu+1)_m), returned as
// the prefactor and the sum separately so callers can take logs.
struct SeriesParts {
  double log_prefactor;
  double sum;
};

SeriesParts power_series(double nu, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < kMaxIterations; ++m) {
    term *= q / (m * (m + nu));
    sum += term;
    if (term < 0.25 * kEps * sum) {
      break;
    }
  }
  return {nu * std::log(0.5 * x) - std::lgamma(nu + 1.0), sum};
}

double series_value(double nu, double x) {
  const auto parts = power_series(nu, x);
  if (nu <= 100.0) {
    return std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0) * parts.sum;
  }
  return std::exp(parts.log_prefactor) * parts.sum;
}

// exp(-x) I_nu(x) for x >= 2. The ratio I_{nu+1}/I_nu comes from a
// continued fraction, is recurred down to the fractional order mu in
// [-1/2, 1/2], and K_mu from Steed's continued fraction anchors the
// normalisation through the Wronskian I_mu K_{mu+1} + I_{mu+1} K_mu = 1/x.
double scaled_large_argument(double nu, double x) {
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  double h = nu * xi;
  if (h < kTiny) {
    h = kTiny;
  }
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i < kMaxIterations; ++i) {
    b += xi2;
    d = 1.0 / (b + d);
    c = b + 1.0 / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      break;
    }
  }
  if (i == kMaxIterations) {
    throw std::runtime_error("bessel_i: ratio continued fraction did not converge");
  }

  double ril = kTiny;
  double ripl = h * ril;
  const double ril1 = ril;
  double fact = nu * xi;
  for (int l = nl - 1; l >= 0; --l) {
    const double ritemp = fact * ril + ripl;
    fact -= xi;
    ripl = fact * ritemp + ril;
    ril = ritemp;
  }
  const double f = ripl / ril;

  // Steed's algorithm for K_mu(x) e^x.
  b = 2.0 * (1.0 + x);
  d = 1.0 / b;
  h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1;
  c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (i = 2; i < kMaxIterations; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) {
      break;
    }
  }
  if (i == kMaxIterations) {
    throw std::runtime_error("bessel_i: Steed continued fraction did not converge");
  }
  h *= a1;

  const double rkmu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
  const double rk1 = rkmu * (mu + x + 0.5 - h) * xi;
  const double rkmup = mu * xi * rkmu - rk1;
  const double rimu = xi / (f * rkmu - rkmup);
  return rimu * ril1 / ril;
}

} // namespace

Order Order::from_twice(int twice_nu) {
  if (twice_nu < 0) {
    throw std::domain_error("Order: nu must be >= 0");
  }
  return Order(twice_nu);
}

Order Order::from_value(double nu) {
  const double twice = 2.0 * nu;
  const double rounded = std::round(twice);
  if (!(nu >= 0.0) || std::abs(twice - rounded) > 1e-12 || rounded > 1e6) {
    throw std::domain_error("Order: nu must be a nonnegative multiple of 1/2");
  }
  return Order(static_cast<int>(rounded));
}

double bessel_i(Order nu, double x) {
  require_nonnegative(x, "bessel_i");
  const double v = nu.value();
  if (x == 0.0) {
    return nu.twice() == 0 ? 1.0 : 0.0;
  }
  if (use_series(v, x)) {
    return series_value(v, x);
  }
  const double scaled = scaled_large_argument(v, x);
  const double log_value = x + std::log(scaled);
  if (log_value >= std::log(std::numeric_limits<double>::max())) {
    throw std::range_error("bessel_i: result overflows double; use log_bessel_i");
  }
  return std::exp(x) * scaled;
}

double log_bessel_i(Order nu, double x) {
  require_nonnegative(x, "log_bessel_i");
  const double v = nu.value();
  if (x == 0.0) {
    return nu.twice() == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  if (use_series(v, x)) {
    const auto parts = power_series(v, x);
    return parts.log_prefactor + std::log(parts.sum);
  }
  return x + std::log(scaled_large_argument(v, x));
}

double bessel_i_scaled(Order nu, double x) {
  require_nonnegative(x, "bessel_i_scaled");
  const double v = nu.value();
  if (x == 0.0) {
    return nu.twice() == 0 ? 1.0 : 0.0;
  }
  if (use_series(v, x)) {
    return series_value(v, x) * std::exp(-x);
  }
  return scaled_large_argument(v, x);
}

double bessel_ratio(Order nu, double x) {
  require_nonnegative(x, "bessel_ratio");
  if (nu.twice() < 1) {
    throw std::domain_error("bessel_ratio: order must be >= 1/2");
  }
  if (x == 0.0) {
    return 0.0;
  }
  // R_nu = 1 / F with F = b_0 + 1/(b_1 + 1/(b_2 + ...)), b_k = 2(nu+k)/x,
  // evaluated by the modified Lentz method.
  const double v = nu.value();
  const double inv_x = 1.0 / x;
  double f = 2.0 * v * inv_x;
  if (f == 0.0) {
    f = kTiny;
  }
  double c = f;
  double d = 0.0;
  for (int k = 1; k < kMaxIterations; ++k) {
    const double bk = 2.0 * (v + k) * inv_x;
    d = bk + d;
    if (d == 0.0) {
      d = kTiny;
    }
    c = bk + 1.0 / c;
    if (c == 0.0) {
      c = kTiny;
    }
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return 1.0 / f;
    }
  }
  throw std::runtime_error("bessel_ratio: continued fraction did not converge");
}

double bessel_ratio_derivative(Order nu, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("bessel_ratio_derivative: argument must be > 0");
  }
  const double r = bessel_ratio(nu, x);
  return 1.0 - ((2.0 * nu.value() - 1.0) / x) * r - r * r;
}

double sphere_area(int spin_dim) {
  if (spin_dim < 1) {
    throw std::domain_error("sphere_area: N must be >= 1");
  }
  const double half = 0.5 * spin_dim;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double b_constant(int spin_dim) {
  if (spin_dim < 2) {
    throw std::domain_error("b_constant: N must be >= 2");
  }
  if (spin_dim % 2 == 0) {
    double product = 1.0;
    for (int k = 0; k < spin_dim / 2; ++k) {
      product *= std::abs(2.0 * k - 1.0);
    }
    return product;
  }
  return std::pow(2.0, 0.5 * spin_dim - 1.0) * std::tgamma(0.5 * (spin_dim - 1)) /
         std::sqrt(std::numbers::pi);
}

} // namespace meanfield::specfun
