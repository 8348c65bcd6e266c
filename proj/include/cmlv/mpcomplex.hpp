#pragma once

// Arbitrary-precision real and complex arithmetic (RAII over MPFR), the
// lemniscatic period Omega = pi / agm(1, sqrt 2), and an evaluator for the
// Weierstrass functions wp, wp' of the square lattice Z[i] (g2 = 4*Omega^4,
// g3 = 0) based on the Laurent series plus argument halving / duplication.

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "cmlv/gaussint.hpp"

namespace cmlv {

// ---------------------------------------------------------------------------
// Real: value-semantic RAII wrapper around mpfr_t.  A Real carries its own
// precision; copies and arithmetic results inherit the (max) precision of
// their sources.  Hot loops may use raw() with the MPFR C API directly.
// ---------------------------------------------------------------------------
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  static Real from_si(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_double(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_mpz(const mpz_class& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static Real from_mpq(const mpq_class& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t max_prec(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

inline Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

// Nearest integer, plus (optionally) the absolute distance |x - round(x)|.
mpz_class round_to_mpz(const Real& x, Real* residual = nullptr);

// Decimal rendering with the given number of significant digits.
std::string to_string(const Real& x, std::size_t digits = 20);

// ---------------------------------------------------------------------------
// BigComplex: a complex number as a pair of Reals.
// ---------------------------------------------------------------------------
struct BigComplex {
  Real re, im;

  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {
    mpfr_set_zero(re.raw(), 1);
    mpfr_set_zero(im.raw(), 1);
  }
  BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex from_gauss(const GaussInt& z, mpfr_prec_t prec) {
    return BigComplex(Real::from_mpz(z.re, prec), Real::from_mpz(z.im, prec));
  }
  mpfr_prec_t prec() const { return max_prec(re, im); }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator*(const BigComplex& a, const Real& s);
BigComplex operator/(const BigComplex& a, const Real& s);
BigComplex conj(const BigComplex& a);
BigComplex mul_i(const BigComplex& a);  // multiply by i
Real abs2(const BigComplex& a);         // re^2 + im^2
Real abs(const BigComplex& a);
BigComplex inv(const BigComplex& a);
std::string to_string(const BigComplex& x, std::size_t digits = 20);

// ---------------------------------------------------------------------------
// AGM and the lemniscatic period.
// ---------------------------------------------------------------------------

// Arithmetic-geometric mean of a, b > 0 by the classical iteration, run until
// |a_n - b_n| <= 2^-(prec+4) * a_n.  If iters is non-null it receives the
// number of iterations used (quadratic convergence: <= ceil(log2 prec) + 4).
Real agm(const Real& a, const Real& b, int* iters = nullptr);

// Omega = pi / agm(1, sqrt 2) = 2.62205755429211981... at the given precision.
Real lemniscate_omega(mpfr_prec_t prec);

// Omega_inf = Omega / D^(1/4), principal branch of the fourth root:
// D > 0 gives a positive real; D < 0 gives Omega * zeta8^-1 / |D|^(1/4),
// i.e. argument -pi/4.
BigComplex omega_infinity(long long D, mpfr_prec_t prec);

// Translate z by the nearest Gaussian integer.  Returns the reduced value
// (components in [-1/2, 1/2]) and the lattice point subtracted.
std::pair<BigComplex, GaussInt> reduce_to_fundamental(const BigComplex& z);

// ---------------------------------------------------------------------------
// Weierstrass evaluator for the lattice Z[i].
// ---------------------------------------------------------------------------

struct PrecisionCtx {
  long prec_bits;      // target (output) precision
  long series_terms;   // Laurent terms kept: prec_bits/3 + 48
  int halving_depth;   // maximum argument halvings (2 suffices on Z[i])
};

PrecisionCtx make_precision_ctx(long prec_bits);

class WpContext {
 public:
  explicit WpContext(long prec_bits);

  const PrecisionCtx& pctx() const { return pctx_; }
  long working_prec() const { return wprec_; }
  const Real& omega() const { return omega_; }  // at working precision
  const Real& e2() const { return e_; }         // e = Omega^4 = g2/4
  Real g2() const { return e_ * 4L; }

  // wp(z), wp'(z) for the lattice Z[i].  Throws input_error with
  // errc::lattice_point when z is (numerically) a lattice point.
  void wp_wpprime(const BigComplex& z, BigComplex& wp_out, BigComplex& wpp_out) const;
  BigComplex wp(const BigComplex& z) const;

 private:
  void eval_series(const BigComplex& z, BigComplex& wp_out, BigComplex& wpp_out) const;

  PrecisionCtx pctx_;
  long wprec_;
  Real omega_;
  Real e_;
  std::vector<Real> a_;  // Laurent coefficients a_1 .. a_T (a_k z^{2k})
};

}  // namespace cmlv
