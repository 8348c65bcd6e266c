#pragma once

// Dense polynomials over Z[i] with a single positive integer denominator:
// P(X) = (sum_m coeffs[m] X^m) / denom.  Coefficient index = degree; the
// representation is kept normalized (no trailing zero coefficients, denom > 0
// and coprime to the integer content of the coefficients).

#include <string>
#include <vector>

#include "cmlv/gaussint.hpp"
#include "cmlv/mpcomplex.hpp"

namespace cmlv {

struct ZiPoly {
  std::vector<GaussInt> coeffs;
  mpz_class denom{1};

  ZiPoly() = default;
  explicit ZiPoly(std::vector<GaussInt> c, mpz_class den = mpz_class(1));

  // Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool is_monic_integral() const;  // lead coeff 1, denom 1

  const GaussInt& coeff(std::size_t m) const;  // 0 beyond the degree

  // Strip trailing zeros, make denom > 0, cancel integer content vs denom.
  void normalize();
};

bool operator==(const ZiPoly& a, const ZiPoly& b);
inline bool operator!=(const ZiPoly& a, const ZiPoly& b) { return !(a == b); }

ZiPoly operator+(const ZiPoly& a, const ZiPoly& b);
ZiPoly operator-(const ZiPoly& a, const ZiPoly& b);
ZiPoly operator*(const ZiPoly& a, const ZiPoly& b);
ZiPoly operator-(const ZiPoly& a);
ZiPoly operator*(const ZiPoly& a, const GaussInt& s);
ZiPoly operator*(const ZiPoly& a, const mpz_class& s);

// X^k with unit coefficient.
ZiPoly zipoly_xpow(std::size_t k);

ZiPoly derivative(const ZiPoly& a);
ZiPoly conj(const ZiPoly& a);

// gcd over Z of all coefficient parts (0 for the zero polynomial).
mpz_class content_z(const ZiPoly& a);

// Remainder of a modulo g, where g must be monic with denom 1
// (throws input_error errc::bad_argument otherwise).  The division is exact
// over Z[i]; the remainder keeps a's denominator.
ZiPoly polmod(const ZiPoly& a, const ZiPoly& g);

// Horner evaluation of the numerator only (the true value times denom).
GaussInt eval_gauss_numerator(const ZiPoly& a, const GaussInt& x);

// Full evaluation (including the denominator) at a complex point.
BigComplex eval_complex(const ZiPoly& a, const BigComplex& x);

std::string to_string(const ZiPoly& a);

}  // namespace cmlv
