#include "meanfield/errors.hpp"
#include "meanfield/quadrature.hpp"
#include "meanfield/specfun.hpp"
#include "meanfield/theory.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace meanfield;
using specfun::Order;

namespace {

// Independent fixed-point iteration for m = tanh(beta m).
double curie_weiss_magnetization(double beta) {
  double m = 1.0;
  for (int i = 0; i < 10000; ++i) {
    m = std::tanh(beta * m);
  }
  return m;
}

double langevin(double r) { return 1.0 / std::tanh(r) - 1.0 / r; }

} // namespace

TEST_CASE("g tends to N at the origin and increases") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(std::abs(theory::g(n, 1e-6) - n) < 1e-9);
    double prev = theory::g(n, 1e-3);
    for (double r = 0.1; r < 50.0; r += 0.37) {
      const double next = theory::g(n, r);
      CHECK(next > prev);
      prev = next;
    }
  }
  // N = 1: g(r) = r / tanh(r); N = 3: g(r) = r / L(r).
  CHECK(std::abs(theory::g(1, 2.0) - 2.0 / std::tanh(2.0)) < 1e-14);
  CHECK(std::abs(theory::g(3, 2.0) - 2.0 / langevin(2.0)) < 1e-13);
}

TEST_CASE("g_inverse inverts g") {
  for (int n = 1; n <= 5; ++n) {
    for (double excess : {1e-6, 0.01, 0.5, 1.0, 3.0, 20.0}) {
      const double beta = n + excess;
      const double r = theory::g_inverse(n, beta);
      CAPTURE(n);
      CAPTURE(beta);
      CHECK(r > 0.0);
      CHECK(std::abs(theory::g(n, r) - beta) < 1e-10 * beta);
    }
    CHECK(theory::g_inverse(n, n) == 0.0);
    CHECK_THROWS_AS(theory::g_inverse(n, n - 0.1), precondition_error);
  }
}

TEST_CASE("free energy vanishes up to the critical point and is negative above") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(theory::free_energy(n, 0.0) == 0.0);
    CHECK(theory::free_energy(n, 0.5 * n) == 0.0);
    CHECK(theory::free_energy(n, n) == 0.0);
    CHECK(theory::free_energy(n, n + 0.5) < 0.0);
    CHECK(theory::magnetization(n, n) == 0.0);
  }
}

TEST_CASE("magnetization reproduces classical fixed points") {
  for (double beta : {1.2, 2.0, 4.0}) {
    CAPTURE(beta);
    CHECK(std::abs(theory::magnetization(1, beta) - curie_weiss_magnetization(beta)) < 1e-10);
  }
  // Heisenberg: mean-field magnetization solves m = L(beta m).
  const double m = theory::magnetization(3, 4.5);
  CHECK(std::abs(m - langevin(4.5 * m)) < 1e-10);
}

TEST_CASE("phi is continuous at the origin and minimised at g_inverse") {
  for (int n = 1; n <= 4; ++n) {
    const double beta = n + 1.0;
    CHECK(theory::phi_functional(n, beta, 0.0) == 0.0);
    CHECK(std::abs(theory::phi_functional(n, beta, 1e-6)) < 1e-10);
    const double r = theory::g_inverse(n, beta);
    const double at = theory::phi_functional(n, beta, r);
    CHECK(at == doctest::Approx(theory::free_energy(n, beta)).epsilon(1e-14));
    for (double dr : {-0.1, -0.01, 0.01, 0.1}) {
      CHECK(theory::phi_functional(n, beta, r + dr) > at);
    }
  }
}

TEST_CASE("normalized rate is nonnegative with zero at the minimiser") {
  for (auto [n, beta] : {std::pair{2, 3.0}, {3, 4.0}, {4, 5.0}, {2, 1.0}}) {
    const double r_star = beta > n ? theory::g_inverse(n, beta) : 0.0;
    CHECK(std::abs(theory::normalized_rate(n, beta, r_star)) < 1e-12);
    for (double r = 0.0; r < 8.0; r += 0.05) {
      CHECK(theory::normalized_rate(n, beta, r) >= -1e-14);
    }
  }
}

TEST_CASE("entropy of the circular exponential family") {
  CHECK(theory::relative_entropy_exponential(0.0) == 0.0);
  for (double b : {0.1, 1.0, 5.0}) {
    // Direct quadrature of the density against its log.
    const double i0 = specfun::bessel_i(Order::from_twice(0), b);
    const double h = quadrature::integrate(
        [b, i0](double t) {
          const double p = std::exp(b * std::cos(t)) / i0;
          return p * std::log(p) / (2 * std::numbers::pi);
        },
        0.0, 2 * std::numbers::pi);
    CHECK(std::abs(theory::relative_entropy_exponential(b) - h) < 1e-10);
  }
}

TEST_CASE("macrostate projection law") {
  for (int n : {2, 3, 4}) {
    for (double b : {0.0, 0.7, 2.172, 6.0}) {
      CAPTURE(n);
      CAPTURE(b);
      const theory::MacrostateProjection law(n, b);
      CHECK(law.cdf(-1.0) == 0.0);
      CHECK(std::abs(law.cdf(1.0) - 1.0) < 1e-12);
      double prev = 0.0;
      for (double y = -0.95; y < 1.0; y += 0.1) {
        const double c = law.cdf(y);
        CHECK(c >= prev);
        prev = c;
      }
      // Density integrates to the cdf increment away from the endpoints.
      const double mass = quadrature::integrate([&law](double y) { return law.density(y); },
                                                -0.5, 0.5);
      CHECK(std::abs(mass - (law.cdf(0.5) - law.cdf(-0.5))) < 1e-9);
    }
  }
  // N = 2, b = 0 is the arcsine law.
  const theory::MacrostateProjection arcsine(2, 0.0);
  CHECK(std::abs(arcsine.cdf(0.3) - (1.0 - std::acos(0.3) / std::numbers::pi)) < 1e-12);
  CHECK(std::isinf(arcsine.density(1.0)));
  // Closed-form normaliser: density(0) = 1 / (pi I_0(b)) for N = 2.
  const double b = 1.3;
  CHECK(std::abs(theory::MacrostateProjection(2, b).density(0.0) -
                 1.0 / (std::numbers::pi * specfun::bessel_i(Order::from_twice(0), b))) < 1e-12);
  // N = 3: density e^{b y} b / (2 sinh b).
  CHECK(std::abs(theory::MacrostateProjection(3, b).density(0.4) -
                 std::exp(b * 0.4) * b / (2 * std::sinh(b))) < 1e-12);
  CHECK_THROWS_AS(theory::MacrostateProjection::at_beta(2, 2.0), precondition_error);
  CHECK(theory::MacrostateProjection::at_beta(2, 3.0).concentration() ==
        doctest::Approx(theory::g_inverse(2, 3.0)));
}

TEST_CASE("supercritical variance") {
  CHECK(theory::supercritical_variance(3.0) == doctest::Approx(1.8930334708241936).epsilon(1e-12));
  CHECK(theory::supercritical_variance(8.0) > 0.0);
  CHECK_THROWS(theory::supercritical_variance(2.0));
}

TEST_CASE("critical densities") {
  CHECK(theory::critical_k(2) == 1.0 / 64.0);
  CHECK(theory::critical_k(3) == 1.0 / 180.0);
  CHECK(theory::critical_k(4) == 1.0 / 384.0);
  CHECK(theory::critical_k(1) == 1.0 / 12.0);
  CHECK(std::abs(theory::critical_density(2, 0.0) - 1.0 / (4 * std::sqrt(std::numbers::pi))) <
        1e-15);
  CHECK(theory::critical_density(4, 0.0) == 0.0);
  CHECK(std::isinf(theory::critical_density(1, 0.0)));
  CHECK(theory::critical_density(3, -1.0) == 0.0);
  CHECK(std::abs(theory::critical_law(4).z_norm - 192.0) < 1e-10);
  for (int n = 1; n <= 4; ++n) {
    const double k = theory::critical_k(n);
    for (double t : {0.5, 3.0, 10.0, 40.0, 200.0}) {
      CAPTURE(n);
      CAPTURE(t);
      CHECK(std::abs(theory::critical_cdf(n, t) - boost::math::gamma_p(0.25 * n, k * t * t)) <
            1e-10);
    }
    CHECK(theory::critical_cdf(n, 0.0) == 0.0);
  }
}

TEST_CASE("theory point rows") {
  const auto critical = theory::theory_point(2, 2.0);
  CHECK(critical.r_star == 0.0);
  CHECK(critical.free_energy == 0.0);
  CHECK(critical.magnetization == 0.0);
  CHECK_FALSE(critical.variance_v.has_value());
  const auto above = theory::theory_point(2, 3.0);
  REQUIRE(above.variance_v.has_value());
  CHECK(above.magnetization == doctest::Approx(0.7241587176263523).epsilon(1e-12));
  CHECK_FALSE(theory::theory_point(3, 4.0).variance_v.has_value());
}
