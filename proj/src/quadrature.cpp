#include "meanfield/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meanfield::quadrature {

namespace {
constexpr unsigned kMaxDepth = 15;
// Boost's error estimate has a floor that makes tighter tolerances recurse to
// full depth; the Kronrod value is far more accurate than |K - G| suggests.
constexpr double kRelativeTolerance = 1e-10;
constexpr double kTailFraction = 1e-18;
} // namespace

double integrate(const Integrand& f, double a, double b) {
  if (a == b) {
    return 0.0;
  }
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, kMaxDepth, kRelativeTolerance, &error);
}

double truncation_point(const Integrand& f, double a) {
  double peak = std::abs(f(a));
  double step = 0.25;
  double t = a;
  for (int i = 0; i < 2000; ++i) {
    t += step;
    const double value = std::abs(f(t));
    peak = std::max(peak, value);
    if (peak > 0.0 && value < kTailFraction * peak && t - a > 1.0) {
      return t;
    }
    step *= 1.25;
  }
  throw std::runtime_error("integrate_to_infinity: integrand does not decay");
}

double integrate_to_infinity(const Integrand& f, double a) {
  const double upper = truncation_point(f, a);
  // Split into pieces so the adaptive rule sees the bulk at a sensible scale.
  constexpr int kPieces = 8;
  double total = 0.0;
  for (int k = 0; k < kPieces; ++k) {
    const double lo = a + (upper - a) * k / kPieces;
    const double hi = a + (upper - a) * (k + 1) / kPieces;
    total += integrate(f, lo, hi);
  }
  return total;
}

} // namespace meanfield::quadrature
