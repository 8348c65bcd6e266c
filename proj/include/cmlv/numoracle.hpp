#pragma once

// Numeric cross-check of the exact trace: Theta_p = sum over the conjugates
// of B_n(u_b) * (Omega_inf^-3 wp')(b), evaluated in fresh high-precision
// floating point, must reproduce Xi_p = num/den from the algebraic route
// (G rounding, J interpolation, Newton sums, polynomial reduction).

#include <string>

#include "cmlv/algprecomp.hpp"

namespace cmlv {

struct OracleReport {
  long long p = 0;
  long prec_bits = 0;
  bool nonzero = false;   // |Theta_p| clears the numeric error bound
  bool matched = false;   // |Theta_p - Xi_p| within the numeric error bound
                          // (term-magnitude sum times 2^-(prec_bits - 160))
  std::string theta;      // rendered numeric trace
  std::string residual;   // rendered |Theta_p - Xi_p|
};

// Evaluates Theta_p at prec_bits (default 4096) from freshly computed
// conjugate points and compares with xi_p_exact(bundle, p).  The same p
// validation as xi_p_exact applies.
OracleReport xi_oracle(const PrecompBundle& bundle, long long p,
                       long prec_bits = 4096);

}  // namespace cmlv
