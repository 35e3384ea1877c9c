#pragma once

#include <cstddef>
#include <stdexcept>

namespace meanfield {

/// Mean-field O(N) model on the complete graph K_n with coupling 1/(2n).
struct ModelParams {
  int spin_dim = 2;        ///< N: spins live on the unit (N-1)-sphere
  std::size_t sites = 1;   ///< n
  double beta = 0.0;       ///< inverse temperature

  /// beta_c = N.
  double critical_beta() const { return static_cast<double>(spin_dim); }

  void validate() const {
    if (spin_dim < 1) {
      throw std::domain_error("ModelParams: spin dimension must be >= 1");
    }
    if (sites < 1) {
      throw std::domain_error("ModelParams: site count must be >= 1");
    }
    if (!(beta >= 0.0)) {
      throw std::domain_error("ModelParams: beta must be >= 0");
    }
  }
};

} // namespace meanfield
