#pragma once

#include <stdexcept>
#include <string>

namespace meanfield {

/// Raised when an operation is called outside the regime it is defined for,
/// e.g. asking for a positive root of g_N below the critical temperature.
class precondition_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised by brute-force oracles when the request exceeds what they can
/// evaluate reliably (too many states, series too ill-conditioned).
class oracle_domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace meanfield
