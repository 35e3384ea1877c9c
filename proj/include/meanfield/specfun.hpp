#pragma once

// Modified Bessel functions of the first kind for orders that are multiples
// of 1/2, together with the ratio R_nu(x) = I_nu(x) / I_{nu-1}(x) and the
// sphere constants used by the O(N) free energy.
//
// Errors: std::domain_error for negative arguments or bad orders,
// std::range_error when I_nu(x) is not representable as a double.

namespace meanfield::specfun {

/// Bessel order nu = k/2, k >= 0. Stored as k so that integer and
/// half-integer orders are exact.
class Order {
public:
  constexpr Order() = default;

  /// nu = twice_nu / 2.
  static Order from_twice(int twice_nu);
  /// Accepts nu >= 0 that is a multiple of 1/2 (within 1e-12).
  static Order from_value(double nu);
  /// nu = N/2 for spin dimension N.
  static Order half_dimension(int spin_dim) { return from_twice(spin_dim); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  friend constexpr bool operator==(Order, Order) = default;

private:
  constexpr explicit Order(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// I_nu(x), relative accuracy ~1e-14 for x in [0, 700].
double bessel_i(Order nu, double x);

/// log I_nu(x). Returns -infinity for nu > 0, x = 0.
double log_bessel_i(Order nu, double x);

/// exp(-x) I_nu(x); finite for all x >= 0.
double bessel_i_scaled(Order nu, double x);

/// R_nu(x) = I_nu(x) / I_{nu-1}(x) for nu >= 1/2, by continued fraction.
/// R_nu(0) = 0 and 0 <= R_nu(x) < 1.
double bessel_ratio(Order nu, double x);

/// dR_nu/dx = 1 - ((2 nu - 1) / x) R_nu(x) - R_nu(x)^2, x > 0.
double bessel_ratio_derivative(Order nu, double x);

/// A_N = 2 pi^{N/2} / Gamma(N/2), area of the unit (N-1)-sphere.
double sphere_area(int spin_dim);

/// B_N: product of |2k-1| for k < N/2 when N is even,
/// 2^{N/2-1} Gamma((N-1)/2) / sqrt(pi) when N is odd. N >= 2.
double b_constant(int spin_dim);

} // namespace meanfield::specfun
