#pragma once

// Exact (rational) evaluation of the normalized Hecke value c_p^+:
//   * power sums of a monic integral polynomial via Newton's identities,
//   * the integer polynomials B_n from the two-term recurrence,
//   * Xi_p = sum over conjugates of B_n(u_b) * (Omega_inf^-3 wp')(b) computed
//     exactly as trace(B_n * J mod G) against the bundled power sums,
//   * c_p^+ = -sign(D) * Xi_p / (4 (p-1)! (f alpha)^p) as an exact rational,
// together with ord_p, digit extraction, and the verdict record.

#include <vector>

#include "cmlv/algprecomp.hpp"
#include "cmlv/cpresult.hpp"
#include "cmlv/gaussint.hpp"
#include "cmlv/zipoly.hpp"

namespace cmlv {

struct PowerSums {
  std::vector<GaussInt> s;  // s[m] = sum of roots^m, m = 0 .. count-1
};

// s_0 .. s_{count-1} for a monic integral G (throws errc::bad_argument
// otherwise).  Uses sigma_h = (-1)^h * coeff(d-h) and
//   s_m = (-1)^{m-1} m sigma_m + sum_{h=1}^{m-1} (-1)^{h-1} s_{m-h} sigma_h.
PowerSums newton_power_sums(const ZiPoly& G, long count);

struct BnPoly {
  long n = 0;
  std::vector<mpz_class> coeffs;  // dense, index = exponent, degree n
};

// B_0 = 1;  B_{n+1}[m] = (m+1)(4m+2) B_n[m-1] - 2D (m+1)(2m+3) B_n[m+1].
// Asserts the parity law (exponents = n mod 2) and the leading-coefficient
// law lead(B_n) = (n+1) lambda_n, lambda_1 = 6, lambda_{n+1} = (n+1)(4n+6)
// lambda_n, at every step.
BnPoly bn_poly_exact(long long D, long n);

// Independent cross-check route from the differential-operator definition
// B_n(wp) = wp^(2n+1) / wp' on the scaled curve (g2 = 4D, g3 = 0):
//   B_{n+1} = 12 X B_n + (18 X^2 - 6D) B_n' + (4 X^3 - 4 D X) B_n'',
// computed with generic polynomial derivative / shift-add operations.
// Used against bn_poly_exact in tests and selftest.
BnPoly bn_poly_via_diffop(long long D, long n);

struct XiExact {
  GaussInt num;
  mpz_class den;  // positive; value = num / den in Q(i)
};

// Xi_p for p = 1 (mod 4), p prime, p not dividing 2D (errc::bad_prime
// otherwise).  n = (p-3)/2.
XiExact xi_p_exact(const PrecompBundle& bundle, long long p);

struct CpOptions {
  int rank = 2;            // s_p under the parity hypothesis
  bool parity_ok = true;   // rank = s_p mod 2 hypothesis holds
  long exact_pmax = 101;   // guard for the exact path
};

struct ExactCp {
  mpq_class value;  // c_p^+ exactly
  XiExact xi;
  CpResult res;     // k = -1 marks the exact path
};

// Exact path; enforces 5 <= p <= opt.exact_pmax (errc::bad_argument beyond).
ExactCp cp_plus_exact(const PrecompBundle& bundle, long long p,
                      const CpOptions& opt = {});

// Digit extraction shared with the modular path: for c = p^ord * u (u a
// p-adic unit), unit_digit = u mod p and table_digit = (c / p^rank) mod p
// (defined when ord >= rank).  Fills ord / digits / exceptional / verdict.
void fill_result_from_rational(CpResult& res, const mpq_class& c, long long p,
                               const CpOptions& opt, bool good_ordinary);

// Whether p is a good ordinary prime for the curve: a_p a p-adic unit.
// Automatic for p > 5 here; decided by point counting for p = 5.
bool good_ordinary_ok(long long D, long long p);

}  // namespace cmlv
