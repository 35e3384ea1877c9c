#pragma once

// Brute-force reference computations. None of these call the fast path they
// are used to check: the Bessel series does not use specfun, the grid
// minimiser does not use g_inverse, and the finite-n oracles enumerate or
// integrate the Gibbs measure directly.

#include "meanfield/specfun.hpp"

#include <json.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace meanfield::oracle {

/// Defining power series of I_nu(x), summed in long double until the term
/// drops below tol * partial sum. Refuses x > 60.
double bessel_series(specfun::Order nu, double x, double tol = 1e-18);

/// R_nu = I_nu / I_{nu-1} from two series evaluations; nu >= 1/2 (the
/// denominator order may be -1/2).
double bessel_ratio_series(specfun::Order nu, double x);

/// Root of r I_{N/2-1}(r) / I_{N/2}(r) = beta by plain bisection on
/// [1e-8, 50] with series-evaluated Bessel functions.
double g_inverse_bisection(int spin_dim, double beta);

struct CurieWeissExact {
  double partition_function = 0.0;  ///< sum over the 2^n states of e^{-beta H_n}
  double mean_s2 = 0.0;             ///< E |S_n|^2
  double pair_correlation = 0.0;    ///< E sigma_1 sigma_2 (0 for n = 1)
  std::vector<std::pair<int, double>> distribution;  ///< (s, P(S_n = s)), s ascending
};

/// Exhaustive enumeration of the n-spin Curie-Weiss model, n <= 20.
CurieWeissExact curie_weiss_exact(int sites, double beta);

struct XyQuadrature {
  double mean_s2 = 0.0;           ///< E |S_n|^2
  double pair_correlation = 0.0;  ///< E <sigma_1, sigma_2>
};

/// Tensor trapezoid rule over theta_2..theta_n (theta_1 = 0) for the XY
/// model with 2 <= n <= 4 sites and grid >= 64 points per angle.
XyQuadrature xy_quadrature(int sites, double beta, int grid);

struct GridMinimum {
  double argmin = 0.0;
  double min_value = 0.0;
};

/// Scans Phi_{beta,N} on a uniform grid over [0, r_max], then refines the
/// best interior cell by golden section and a finite-difference Newton
/// polish. A minimum on the first grid point is reported as r = 0.
GridMinimum phi_grid_minimize(int spin_dim, double beta, double r_max, std::size_t steps);

/// E[T^j] under p_N, by quadrature, j in {1, 2, 3, 4}.
double critical_moment_oracle(int spin_dim, int order);

/// Golden-value table: JSON array of {name, params, value, oracle, tolerance}.
nlohmann::json generate_golden();

} // namespace meanfield::oracle
