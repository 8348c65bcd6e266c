#include "cmlv/mpcomplex.hpp"

#include <cmath>
#include <cstdio>

#include "cmlv/errors.hpp"

namespace cmlv {

mpz_class round_to_mpz(const Real& x, Real* residual) {
  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), x.raw(), MPFR_RNDN);
  if (residual != nullptr) {
    Real r(x.prec());
    mpfr_sub_z(r.raw(), x.raw(), n.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    *residual = r;
  }
  return n;
}

std::string to_string(const Real& x, std::size_t digits) {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x.raw()) < 0) {
    throw verify_error("to_string: mpfr_asprintf failed");
  }
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

// --------------------------------------------------------------------------
// BigComplex arithmetic.
// --------------------------------------------------------------------------

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re + b.re, a.im + b.im);
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re - b.re, a.im - b.im);
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  mpfr_prec_t p = a.prec() > b.prec() ? a.prec() : b.prec();
  BigComplex r(p);
  Real t(p);
  // re = a.re b.re - a.im b.im ; im = a.re b.im + a.im b.re
  mpfr_mul(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_sub(r.re.raw(), r.re.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul(r.im.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_add(r.im.raw(), r.im.raw(), t.raw(), MPFR_RNDN);
  return r;
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  Real n = abs2(b);
  // (a.re b.re + a.im b.im)/n + i (a.im b.re - a.re b.im)/n
  Real re = (a.re * b.re + a.im * b.im) / n;
  Real im = (a.im * b.re - a.re * b.im) / n;
  return BigComplex(std::move(re), std::move(im));
}
BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }
BigComplex operator*(const BigComplex& a, const Real& s) {
  return BigComplex(a.re * s, a.im * s);
}
BigComplex operator/(const BigComplex& a, const Real& s) {
  return BigComplex(a.re / s, a.im / s);
}
BigComplex conj(const BigComplex& a) { return BigComplex(a.re, -a.im); }
BigComplex mul_i(const BigComplex& a) { return BigComplex(-a.im, a.re); }
Real abs2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
Real abs(const BigComplex& a) {
  Real r(a.prec());
  mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
  return r;
}
BigComplex inv(const BigComplex& a) {
  Real n = abs2(a);
  return BigComplex(a.re / n, -(a.im / n));
}
std::string to_string(const BigComplex& x, std::size_t digits) {
  return to_string(x.re, digits) + (x.im.sign() < 0 ? " - " : " + ") +
         to_string(abs(x.im), digits) + "i";
}

// --------------------------------------------------------------------------
// AGM and periods.
// --------------------------------------------------------------------------

Real agm(const Real& a0, const Real& b0, int* iters) {
  if (a0.sign() <= 0 || b0.sign() <= 0) {
    throw input_error(errc::bad_argument, "agm: arguments must be positive");
  }
  mpfr_prec_t prec = max_prec(a0, b0);
  Real a(prec), b(prec), t(prec), diff(prec);
  mpfr_set(a.raw(), a0.raw(), MPFR_RNDN);
  mpfr_set(b.raw(), b0.raw(), MPFR_RNDN);
  int n = 0;
  for (;;) {
    mpfr_sub(diff.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDN);
    // Stop once |a - b| <= |a| * 2^-(prec-3); a few ulps of slack keeps the
    // criterion reachable despite rounding noise, and the final averaging
    // below pushes the error quadratically under one ulp.
    mpfr_mul_2si(t.raw(), a.raw(), -(prec - 3), MPFR_RNDN);
    mpfr_abs(t.raw(), t.raw(), MPFR_RNDN);
    if (mpfr_cmp(diff.raw(), t.raw()) <= 0) break;
    // (a, b) <- ((a+b)/2, sqrt(ab))
    mpfr_mul(t.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_add(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_div_2ui(a.raw(), a.raw(), 1, MPFR_RNDN);
    mpfr_sqrt(b.raw(), t.raw(), MPFR_RNDN);
    ++n;
    if (n > 8 * 64) throw verify_error("agm: failed to converge");
  }
  if (iters != nullptr) *iters = n;
  mpfr_add(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
  mpfr_div_2ui(a.raw(), a.raw(), 1, MPFR_RNDN);
  return a;
}

Real lemniscate_omega(mpfr_prec_t prec) {
  // Work with guard bits so the returned value is good to full precision.
  mpfr_prec_t wp = prec + 32;
  Real one = Real::from_si(1, wp);
  Real two = Real::from_si(2, wp);
  Real m = agm(one, sqrt(two));
  Real pi(wp);
  mpfr_const_pi(pi.raw(), MPFR_RNDN);
  Real om = pi / m;
  Real out(prec);
  mpfr_set(out.raw(), om.raw(), MPFR_RNDN);
  return out;
}

BigComplex omega_infinity(long long D, mpfr_prec_t prec) {
  if (D == 0) throw input_error(errc::d_zero, "omega_infinity: D = 0");
  mpfr_prec_t wp = prec + 32;
  Real om = lemniscate_omega(wp);
  Real absd = Real::from_mpz(mpz_class(static_cast<long>(D > 0 ? D : -D)), wp);
  Real root(wp);
  mpfr_rootn_ui(root.raw(), absd.raw(), 4, MPFR_RNDN);  // |D|^(1/4) > 0
  Real scale = om / root;
  BigComplex out(prec);
  if (D > 0) {
    mpfr_set(out.re.raw(), scale.raw(), MPFR_RNDN);
    mpfr_set_zero(out.im.raw(), 1);
  } else {
    // principal branch: D^(1/4) = |D|^(1/4) e^{i pi/4}, so
    // Omega_inf = scale * e^{-i pi/4} = scale * (sqrt2/2) (1 - i)
    Real half_sqrt2 = sqrt(Real::from_si(2, wp)) / 2L;
    Real c = scale * half_sqrt2;
    mpfr_set(out.re.raw(), c.raw(), MPFR_RNDN);
    mpfr_neg(out.im.raw(), c.raw(), MPFR_RNDN);
  }
  return out;
}

std::pair<BigComplex, GaussInt> reduce_to_fundamental(const BigComplex& z) {
  GaussInt n(round_to_mpz(z.re), round_to_mpz(z.im));
  mpfr_prec_t p = z.prec();
  BigComplex red(p);
  mpfr_sub_z(red.re.raw(), z.re.raw(), n.re.get_mpz_t(), MPFR_RNDN);
  mpfr_sub_z(red.im.raw(), z.im.raw(), n.im.get_mpz_t(), MPFR_RNDN);
  return {std::move(red), std::move(n)};
}

// --------------------------------------------------------------------------
// Weierstrass context.
// --------------------------------------------------------------------------

PrecisionCtx make_precision_ctx(long prec_bits) {
  PrecisionCtx ctx;
  ctx.prec_bits = prec_bits;
  ctx.series_terms = static_cast<long>(prec_bits / 3.0) + 48;
  ctx.halving_depth = 2;
  return ctx;
}

WpContext::WpContext(long prec_bits)
    : pctx_(make_precision_ctx(prec_bits)),
      wprec_(prec_bits + 32L * pctx_.halving_depth + 64L),
      omega_(lemniscate_omega(wprec_)),
      e_(wprec_) {
  // e = Omega^4 (= g2/4 for the lattice Z[i], where g2 = 4 Omega^4, g3 = 0).
  mpfr_pow_ui(e_.raw(), omega_.raw(), 4, MPFR_RNDN);

  // Laurent coefficients: wp(z) = z^-2 + sum_{k>=1} a_k z^{2k} with
  //   a_1 = g2/20, a_2 = 0 (g3 = 0),
  //   a_k = 3 / ((2k+3)(k-2)) * sum_{m=1}^{k-2} a_m a_{k-1-m}   (k >= 3).
  long T = pctx_.series_terms;
  a_.reserve(static_cast<std::size_t>(T));
  Real a1 = (e_ * 4L) / 20L;
  a_.push_back(a1);
  if (T >= 2) a_.push_back(Real::from_si(0, wprec_));
  Real acc(wprec_), t(wprec_);
  for (long k = 3; k <= T; ++k) {
    mpfr_set_zero(acc.raw(), 1);
    for (long m = 1; m <= k - 2; ++m) {
      mpfr_mul(t.raw(), a_[static_cast<std::size_t>(m - 1)].raw(),
               a_[static_cast<std::size_t>(k - 1 - m - 1)].raw(), MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_mul_si(acc.raw(), acc.raw(), 3, MPFR_RNDN);
    mpfr_div_si(acc.raw(), acc.raw(), (2 * k + 3) * (k - 2), MPFR_RNDN);
    a_.push_back(acc);
  }
}

void WpContext::eval_series(const BigComplex& z, BigComplex& wp_out,
                            BigComplex& wpp_out) const {
  // wp  = 1/w + S0            with w = z^2, S0 = sum a_k w^k
  // wp' = -2/(w z) + S1 / z   with        S1 = sum 2k a_k w^k
  BigComplex w = z * z;
  BigComplex wpow = w;
  BigComplex s0(wprec_), s1(wprec_), term(wprec_);
  Real t(wprec_);
  long T = pctx_.series_terms;
  for (long k = 1; k <= T; ++k) {
    const Real& ak = a_[static_cast<std::size_t>(k - 1)];
    if (mpfr_zero_p(ak.raw()) == 0) {
      mpfr_mul(term.re.raw(), wpow.re.raw(), ak.raw(), MPFR_RNDN);
      mpfr_mul(term.im.raw(), wpow.im.raw(), ak.raw(), MPFR_RNDN);
      mpfr_add(s0.re.raw(), s0.re.raw(), term.re.raw(), MPFR_RNDN);
      mpfr_add(s0.im.raw(), s0.im.raw(), term.im.raw(), MPFR_RNDN);
      mpfr_mul_si(term.re.raw(), term.re.raw(), 2 * k, MPFR_RNDN);
      mpfr_mul_si(term.im.raw(), term.im.raw(), 2 * k, MPFR_RNDN);
      mpfr_add(s1.re.raw(), s1.re.raw(), term.re.raw(), MPFR_RNDN);
      mpfr_add(s1.im.raw(), s1.im.raw(), term.im.raw(), MPFR_RNDN);
    }
    if (k < T) {
      // wpow *= w (in place via term as scratch)
      mpfr_mul(term.re.raw(), wpow.re.raw(), w.re.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), wpow.im.raw(), w.im.raw(), MPFR_RNDN);
      mpfr_sub(term.re.raw(), term.re.raw(), t.raw(), MPFR_RNDN);
      mpfr_mul(term.im.raw(), wpow.re.raw(), w.im.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), wpow.im.raw(), w.re.raw(), MPFR_RNDN);
      mpfr_add(term.im.raw(), term.im.raw(), t.raw(), MPFR_RNDN);
      mpfr_set(wpow.re.raw(), term.re.raw(), MPFR_RNDN);
      mpfr_set(wpow.im.raw(), term.im.raw(), MPFR_RNDN);
    }
  }
  BigComplex winv = inv(w);
  wp_out = winv + s0;
  BigComplex zinv = inv(z);
  wpp_out = (s1 - (winv + winv)) * zinv;
}

void WpContext::wp_wpprime(const BigComplex& z_in, BigComplex& wp_out,
                           BigComplex& wpp_out) const {
  // Lift to working precision and reduce modulo Z[i].
  BigComplex z(wprec_);
  mpfr_set(z.re.raw(), z_in.re.raw(), MPFR_RNDN);
  mpfr_set(z.im.raw(), z_in.im.raw(), MPFR_RNDN);
  z = reduce_to_fundamental(z).first;

  // Reject (numerical) lattice points: reduced |z|^2 below 2^-(wprec).
  Real n2 = abs2(z);
  Real thresh(wprec_);
  mpfr_set_ui_2exp(thresh.raw(), 1, -wprec_, MPFR_RNDN);
  if (mpfr_zero_p(n2.raw()) != 0 || cmp(n2, thresh) < 0) {
    throw input_error(errc::lattice_point, "wp: z is a lattice point of Z[i]");
  }

  // Halve until |z|^2 <= 0.35^2 = 0.1225 (at most twice on the fundamental
  // square, but loop for safety).
  Real lim = Real::from_double(0.1225, wprec_);
  int h = 0;
  while (cmp(abs2(z), lim) > 0) {
    mpfr_div_2ui(z.re.raw(), z.re.raw(), 1, MPFR_RNDN);
    mpfr_div_2ui(z.im.raw(), z.im.raw(), 1, MPFR_RNDN);
    ++h;
    if (h > 8) throw verify_error("wp: halving failed to reduce |z|");
  }

  BigComplex x(wprec_), y(wprec_);
  eval_series(z, x, y);

  // Undo the halvings with the duplication law (g3 = 0, e = g2/4):
  //   wp(2u)  = R(x)   = (x^2 + e)^2 / (4x (x^2 - e))
  //   wp'(2u) = R'(x) * wp'(u) / 2,
  //   R'(x) = [4x (x^2 + e) * den - num * (12 x^2 - 4e)] / den^2.
  BigComplex ec(wprec_);
  mpfr_set(ec.re.raw(), e_.raw(), MPFR_RNDN);
  for (int j = 0; j < h; ++j) {
    BigComplex x2 = x * x;
    BigComplex sum = x2 + ec;
    BigComplex dif = x2 - ec;
    BigComplex num = sum * sum;
    BigComplex four_x = x * Real::from_si(4, wprec_);
    BigComplex den = four_x * dif;
    if (mpfr_zero_p(abs2(den).raw()) != 0) {
      throw verify_error("wp: duplication hit a two-torsion value");
    }
    BigComplex dden = x2 * Real::from_si(12, wprec_) - ec * Real::from_si(4, wprec_);
    BigComplex rprime = (four_x * sum * den - num * dden) / (den * den);
    x = num / den;
    y = rprime * y / Real::from_si(2, wprec_);
  }

  // Round down to the requested output precision.
  BigComplex ox(pctx_.prec_bits), oy(pctx_.prec_bits);
  mpfr_set(ox.re.raw(), x.re.raw(), MPFR_RNDN);
  mpfr_set(ox.im.raw(), x.im.raw(), MPFR_RNDN);
  mpfr_set(oy.re.raw(), y.re.raw(), MPFR_RNDN);
  mpfr_set(oy.im.raw(), y.im.raw(), MPFR_RNDN);
  wp_out = ox;
  wpp_out = oy;
}

BigComplex WpContext::wp(const BigComplex& z) const {
  BigComplex p(pctx_.prec_bits), q(pctx_.prec_bits);
  wp_wpprime(z, p, q);
  return p;
}

}  // namespace cmlv
