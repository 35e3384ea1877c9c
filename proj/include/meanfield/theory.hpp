#pragma once

// Infinite-volume theory of the mean-field O(N) model.
//
// Everything is expressed through the exponential-family radius r: the
// canonical macrostate above beta_c = N is a von Mises-Fisher law with
// concentration r = g_N^{-1}(beta), and the mean spin has length
// R_{N/2}(r) = I_{N/2}(r) / I_{N/2-1}(r).

#include <optional>

namespace meanfield::theory {

/// g_N(r) = r I_{N/2-1}(r) / I_{N/2}(r) for r > 0. Tends to N as r -> 0+.
double g(int spin_dim, double r);

/// Unique r* >= 0 with g_N(r*) = beta; 0 at beta = N. Throws
/// precondition_error for beta < N.
double g_inverse(int spin_dim, double beta);

/// Phi_{beta,N}(r): entropy of the radius-r exponential family minus the
/// mean-field energy. Continuous at r = 0 with value 0.
double phi_functional(int spin_dim, double beta, double r);

/// phi_N(beta): 0 for beta < N, Phi_{beta,N}(g_N^{-1}(beta)) otherwise.
double free_energy(int spin_dim, double beta);

/// |M_N| = R_{N/2}(g_N^{-1}(beta)) above beta_c, 0 at or below it.
double magnetization(int spin_dim, double beta);

/// Raw rate curve Phi_{beta,N}(r), negative at its supercritical minimum.
double rate_function(int spin_dim, double beta, double r);

/// Phi_{beta,N}(r) - phi_N(beta); nonnegative, zero at the minimiser.
double normalized_rate(int spin_dim, double beta, double r);

/// H(nu_b | uniform) = b R_1(b) - log I_0(b) for the circle (N = 2).
double relative_entropy_exponential(double b);

/// Law of the projection <sigma, m_hat> of one spin onto the magnetisation
/// direction under the macrostate with concentration b:
/// q(y) proportional to (1 - y^2)^{(N-3)/2} e^{b y} on [-1, 1].
class MacrostateProjection {
public:
  MacrostateProjection(int spin_dim, double concentration);

  /// Macrostate at inverse temperature beta > N.
  static MacrostateProjection at_beta(int spin_dim, double beta);

  int spin_dim() const { return spin_dim_; }
  double concentration() const { return b_; }

  /// Density on [-1, 1]; +infinity at y = +-1 for N = 2.
  double density(double y) const;
  double cdf(double y) const;

private:
  double theta_integrand(double theta) const;

  int spin_dim_;
  double b_;
  double norm_;
};

double macrostate_projection_density(int spin_dim, double beta, double y);

/// V of the supercritical CLT for |S_n|^2 (N = 2, beta > 2).
double supercritical_variance(double beta);

/// p_N(t) = t^{(N-2)/2} e^{-k t^2} / Z on t >= 0, k = 1 / (N^2 (4N + 8)).
struct CriticalDensity {
  int spin_dim = 0;
  double k = 0.0;
  double z_norm = 0.0;

  double density(double t) const;
  double cdf(double t) const;
};

/// Cached per N; safe to call concurrently.
CriticalDensity critical_law(int spin_dim);

double critical_k(int spin_dim);
double critical_density(int spin_dim, double t);
double critical_cdf(int spin_dim, double t);

/// One row of a tabulated theory curve.
struct TheoryPoint {
  double beta = 0.0;
  double r_star = 0.0;
  double free_energy = 0.0;
  double magnetization = 0.0;
  std::optional<double> variance_v;
};

TheoryPoint theory_point(int spin_dim, double beta);

} // namespace meanfield::theory
