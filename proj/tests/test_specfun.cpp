#include "meanfield/oracle.hpp"
#include "meanfield/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace meanfield;
using specfun::Order;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("order stores multiples of one half exactly") {
  CHECK(Order::from_twice(3).value() == 1.5);
  CHECK(Order::from_value(2.0).twice() == 4);
  CHECK(Order::half_dimension(3) == Order::from_twice(3));
  CHECK(Order::from_twice(4).is_integer());
  CHECK_FALSE(Order::from_twice(1).is_integer());
  CHECK_THROWS_AS(Order::from_value(0.3), std::domain_error);
  CHECK_THROWS_AS(Order::from_twice(-1), std::domain_error);
}

TEST_CASE("bessel_i matches high-precision reference values") {
  struct Case {
    double nu, x, value;
  };
  const Case cases[] = {{0, 1, 1.2660658777520083356},     {1, 1, 0.56515910399248502721},
                        {0, 10, 2815.7166284662544715},    {0, 100, 1.0737517071310738235e+42},
                        {2.5, 3, 1.5153394466819651377},   {1.5, 50, 2.8666537159314642411e+20},
                        {0, 700, 1.5295933476718737363e+302}, {3, 0.01, 2.0833463541992189253e-8}};
  for (const auto& c : cases) {
    CAPTURE(c.nu);
    CAPTURE(c.x);
    CHECK(rel(specfun::bessel_i(Order::from_value(c.nu), c.x), c.value) < 1e-13);
  }
}

TEST_CASE("log and scaled forms agree with the direct value") {
  CHECK(std::abs(specfun::log_bessel_i(Order::from_value(0), 700) - 695.80569999844344908) <
        1e-11);
  CHECK(rel(specfun::bessel_i_scaled(Order::from_value(0), 100), 0.039944379299096682648) <
        1e-13);
  CHECK(std::abs(specfun::log_bessel_i(Order::from_value(3), 0.01) - (-17.686705318876071215)) <
        1e-12);
  CHECK(specfun::log_bessel_i(Order::from_twice(1), 0.0) == -INFINITY);
  CHECK(specfun::log_bessel_i(Order::from_twice(0), 0.0) == 0.0);
  // log I_0 stays finite where I_0 itself overflows.
  CHECK(std::isfinite(specfun::log_bessel_i(Order::from_twice(0), 5000.0)));
  CHECK_THROWS_AS(specfun::bessel_i(Order::from_twice(0), 5000.0), std::range_error);
}

TEST_CASE("bessel_i edge values and domain") {
  CHECK(specfun::bessel_i(Order::from_twice(0), 0.0) == 1.0);
  CHECK(specfun::bessel_i(Order::from_twice(2), 0.0) == 0.0);
  CHECK_THROWS_AS(specfun::bessel_i(Order::from_twice(0), -1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_ratio(Order::from_twice(0), 1.0), std::domain_error);
}

TEST_CASE("three-term recurrence holds across the series and asymptotic ranges") {
  for (int twice = 2; twice <= 12; ++twice) {
    const double nu = 0.5 * twice;
    for (double x : {0.3, 4.0, 17.0, 60.0, 250.0}) {
      const double lo = specfun::bessel_i_scaled(Order::from_twice(twice - 2), x);
      const double mid = specfun::bessel_i_scaled(Order::from_twice(twice), x);
      const double hi = specfun::bessel_i_scaled(Order::from_twice(twice + 2), x);
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(std::abs(lo - hi - 2.0 * nu / x * mid) <= 1e-13 * lo);
    }
  }
}

TEST_CASE("fast bessel_i agrees with the series oracle on a dense grid") {
  for (int twice = 0; twice <= 8; ++twice) {
    for (double x = 0.05; x <= 55.0; x *= 1.37) {
      const auto nu = Order::from_twice(twice);
      CAPTURE(twice);
      CAPTURE(x);
      CHECK(rel(specfun::bessel_i(nu, x), oracle::bessel_series(nu, x)) < 1e-12);
    }
  }
}

TEST_CASE("ratio R_nu is the quotient of neighbouring orders") {
  CHECK(rel(specfun::bessel_ratio(Order::from_twice(2), 2.0), 0.69777465796400798201) < 1e-14);
  CHECK(rel(specfun::bessel_ratio(Order::from_twice(4), 1000.0), 0.99850037537549303311) < 1e-14);
  CHECK(specfun::bessel_ratio(Order::from_twice(2), 0.0) == 0.0);
  for (double x : {0.01, 0.7, 3.0, 40.0}) {
    CHECK(rel(specfun::bessel_ratio(Order::from_twice(1), x), std::tanh(x)) < 1e-14);
  }
  for (int twice = 2; twice <= 8; ++twice) {
    for (double x : {1e-6, 0.01, 0.7, 3.0, 40.0, 400.0}) {
      const double r = specfun::bessel_ratio(Order::from_twice(twice), x);
      const double q = specfun::bessel_i_scaled(Order::from_twice(twice), x) /
                       specfun::bessel_i_scaled(Order::from_twice(twice - 2), x);
      CAPTURE(twice);
      CAPTURE(x);
      CHECK(r >= 0.0);
      CHECK(r < 1.0);
      CHECK(rel(r, q) < 1e-12);
    }
  }
  // Small-argument limit R_nu(x) ~ x / (2 nu).
  CHECK(rel(specfun::bessel_ratio(Order::from_twice(3), 1e-8), 1e-8 / 3.0) < 1e-12);
}

TEST_CASE("ratio derivative matches a central difference") {
  for (int twice : {1, 2, 3, 4, 6}) {
    for (double x : {0.2, 1.5, 6.0, 30.0}) {
      const auto nu = Order::from_twice(twice);
      const double h = 1e-5 * x;
      const double fd =
          (specfun::bessel_ratio(nu, x + h) - specfun::bessel_ratio(nu, x - h)) / (2 * h);
      CAPTURE(twice);
      CAPTURE(x);
      CHECK(std::abs(specfun::bessel_ratio_derivative(nu, x) - fd) < 1e-8);
    }
  }
}

TEST_CASE("sphere constants") {
  CHECK(rel(specfun::sphere_area(1), 2.0) < 1e-15);
  CHECK(rel(specfun::sphere_area(2), 2 * std::numbers::pi) < 1e-15);
  CHECK(rel(specfun::sphere_area(3), 4 * std::numbers::pi) < 1e-15);
  CHECK(rel(specfun::sphere_area(4), 2 * std::numbers::pi * std::numbers::pi) < 1e-15);
  CHECK(specfun::b_constant(2) == 1.0);
  CHECK(specfun::b_constant(4) == 1.0);
  CHECK(specfun::b_constant(6) == 3.0);
  CHECK(specfun::b_constant(8) == 15.0);
  CHECK(rel(specfun::b_constant(3), std::sqrt(2.0 / std::numbers::pi)) < 1e-15);
  CHECK(rel(specfun::b_constant(5), 2.0 * std::sqrt(2.0 / std::numbers::pi)) < 1e-15);
  CHECK_THROWS(specfun::b_constant(1));
  CHECK_THROWS(specfun::sphere_area(0));
}
