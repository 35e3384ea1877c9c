#pragma once

#include <functional>

namespace meanfield::quadrature {

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) on a finite interval [a, b].
double integrate(const Integrand& f, double a, double b);

/// Integral over [a, inf) of an integrand with sub-Gaussian tail. The range is
/// truncated where f drops below 1e-18 of the largest value seen.
double integrate_to_infinity(const Integrand& f, double a);

/// Right end of the truncated range used by integrate_to_infinity.
double truncation_point(const Integrand& f, double a);

} // namespace meanfield::quadrature
