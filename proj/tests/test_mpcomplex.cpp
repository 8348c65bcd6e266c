#include "cmlv/mpcomplex.hpp"

#include <string>

#include "cmlv/errors.hpp"
#include "doctest.h"

using namespace cmlv;

namespace {

Real R(const char* s, long prec) {
  Real r(prec);
  REQUIRE(mpfr_set_str(r.raw(), s, 10, MPFR_RNDN) == 0);
  return r;
}

BigComplex C(const char* re, const char* im, long prec) {
  return BigComplex(R(re, prec), R(im, prec));
}

// |a-b| <= 2^-bits * (1 + |a| + |b|)
bool close(const Real& a, const Real& b, long bits) {
  Real d = abs(a - b);
  Real scale = Real::from_si(1, max_prec(a, b)) + abs(a) + abs(b);
  Real tol(scale.prec());
  mpfr_mul_2si(tol.raw(), scale.raw(), -bits, MPFR_RNDN);
  return cmp(d, tol) <= 0;
}

bool cclose(const BigComplex& a, const BigComplex& b, long bits) {
  return close(a.re, b.re, bits) && close(a.im, b.im, bits);
}

// Independent copies of the duplication formulas, for cross-checking.
BigComplex dup_R(const BigComplex& x, const Real& e) {
  BigComplex ec(x.prec());
  mpfr_set(ec.re.raw(), e.raw(), MPFR_RNDN);
  BigComplex x2 = x * x;
  BigComplex num = (x2 + ec) * (x2 + ec);
  BigComplex den = x * Real::from_si(4, x.prec()) * (x2 - ec);
  return num / den;
}

BigComplex dup_Rprime(const BigComplex& x, const Real& e) {
  BigComplex ec(x.prec());
  mpfr_set(ec.re.raw(), e.raw(), MPFR_RNDN);
  BigComplex x2 = x * x;
  BigComplex num = (x2 + ec) * (x2 + ec);
  BigComplex den = x * Real::from_si(4, x.prec()) * (x2 - ec);
  BigComplex dnum = x * (x2 + ec) * Real::from_si(4, x.prec());
  BigComplex dden =
      x2 * Real::from_si(12, x.prec()) - ec * Real::from_si(4, x.prec());
  return (dnum * den - num * dden) / (den * den);
}

}  // namespace

TEST_SUITE("mpcomplex") {

TEST_CASE("lemniscate constant") {
  const long prec = 512;
  Real om = lemniscate_omega(prec);

  // Pinned leading digits.
  std::string s = to_string(om, 18);
  CHECK(s.substr(0, 18) == "2.6220575542921198");

  // Independent route 1: MPFR's own AGM.
  Real one = Real::from_si(1, prec + 32);
  Real rt2 = sqrt(Real::from_si(2, prec + 32));
  Real m(prec + 32);
  mpfr_agm(m.raw(), one.raw(), rt2.raw(), MPFR_RNDN);
  Real pi(prec + 32);
  mpfr_const_pi(pi.raw(), MPFR_RNDN);
  CHECK(close(om, pi / m, prec - 8));

  // Independent route 2: Omega = Gamma(1/4)^2 / (2 sqrt(2 pi)).
  Real quarter = Real::from_si(1, prec + 32) / 4L;
  Real g(prec + 32);
  mpfr_gamma(g.raw(), quarter.raw(), MPFR_RNDN);
  Real denom = sqrt(pi * 2L) * 2L;
  CHECK(close(om, g * g / denom, prec - 8));

  // Quadratic convergence: iterations <= ceil(log2 prec) + 4.
  for (long p : {256L, 4096L}) {
    int iters = 0;
    Real a = Real::from_si(1, p);
    Real b = sqrt(Real::from_si(2, p));
    agm(a, b, &iters);
    long bound = 4;
    while ((1L << bound) < p) ++bound;  // now 2^bound >= p
    CHECK(iters <= bound + 4);
  }

  // agm(a, a) = a immediately.
  int it = -1;
  Real five = Real::from_si(5, 128);
  Real m2 = agm(five, five, &it);
  CHECK(it == 0);
  CHECK(close(m2, five, 120));

  CHECK_THROWS_AS(agm(Real::from_si(-1, 64), Real::from_si(1, 64)), input_error);
}

TEST_CASE("omega_infinity branches") {
  const long prec = 256;
  Real om = lemniscate_omega(prec);
  Real om4 = om * om * om * om;

  // D > 0: positive real with Omega_inf^4 * D = Omega^4.
  for (long long D : {17LL, 3LL, 5LL}) {
    BigComplex oi = omega_infinity(D, prec);
    CHECK(oi.re.sign() > 0);
    CHECK(mpfr_zero_p(oi.im.raw()) != 0);
    BigComplex oi4 = (oi * oi) * (oi * oi);
    CHECK(close(oi4.re * static_cast<long>(D), om4, prec - 16));
  }

  // D < 0: argument -pi/4 (re = -im > 0) and Omega_inf^4 * D = Omega^4.
  BigComplex oi = omega_infinity(-14, prec);
  CHECK(oi.re.sign() > 0);
  CHECK(oi.im.sign() < 0);
  CHECK(close(oi.re, -oi.im, prec - 16));
  BigComplex oi4 = (oi * oi) * (oi * oi);
  CHECK(close(oi4.re * (-14L), om4, prec - 16));
  Real zero = Real::from_si(0, prec);
  CHECK(close(oi4.im, zero, prec - 16));

  CHECK_THROWS_AS(omega_infinity(0, prec), input_error);
}

TEST_CASE("reduce_to_fundamental") {
  const long prec = 256;
  auto [red, lat] = reduce_to_fundamental(C("1.6", "-0.7", prec));
  CHECK(lat == GaussInt(2, -1));
  CHECK(cclose(red, C("-0.4", "0.3", prec), prec - 16));

  // Already reduced: identity.
  auto [red2, lat2] = reduce_to_fundamental(C("0.25", "-0.375", prec));
  CHECK(lat2 == GaussInt(0, 0));
  CHECK(cclose(red2, C("0.25", "-0.375", prec), prec));

  // Components stay within [-1/2, 1/2].
  auto [red3, lat3] = reduce_to_fundamental(C("123.498", "-77.503", prec));
  CHECK(lat3 == GaussInt(123, -78));
  Real half = Real::from_si(1, prec) / 2L;
  CHECK(cmp(abs(red3.re), half) <= 0);
  CHECK(cmp(abs(red3.im), half) <= 0);
}

TEST_CASE("precision ctx defaults") {
  PrecisionCtx ctx = make_precision_ctx(256);
  CHECK(ctx.prec_bits == 256);
  CHECK(ctx.series_terms == 256 / 3 + 48);
  CHECK(ctx.halving_depth == 2);
}

TEST_CASE("wp special values at torsion points") {
  const long prec = 384;
  WpContext W(prec);
  Real om = lemniscate_omega(prec + 64);
  Real om2 = om * om;
  Real zero = Real::from_si(0, prec);

  // Half periods: wp(1/2) = Omega^2, wp(i/2) = -Omega^2, wp((1+i)/2) = 0,
  // wp' = 0 at all three.  (1/2 uses one halving; (1+i)/2 uses two.)
  BigComplex p(prec), q(prec);
  W.wp_wpprime(C("0.5", "0", prec), p, q);
  CHECK(close(p.re, om2, prec - 24));
  CHECK(close(p.im, zero, prec - 24));
  CHECK(close(q.re, zero, prec - 24));
  CHECK(close(q.im, zero, prec - 24));

  W.wp_wpprime(C("0", "0.5", prec), p, q);
  CHECK(close(p.re, -om2, prec - 24));
  CHECK(close(p.im, zero, prec - 24));
  CHECK(close(abs(q), zero, prec - 24));

  W.wp_wpprime(C("0.5", "0.5", prec), p, q);
  CHECK(close(p.re, zero, prec - 24));
  CHECK(close(p.im, zero, prec - 24));
  CHECK(close(abs(q), zero, prec - 24));

  // Quarter period (pure series, no halving):
  //   wp(1/4) = Omega^2 (1 + sqrt 2),  wp'(1/4) = -2 sqrt2 Omega^3 (1 + sqrt2).
  Real rt2 = sqrt(Real::from_si(2, prec + 64));
  Real one = Real::from_si(1, prec + 64);
  W.wp_wpprime(C("0.25", "0", prec), p, q);
  CHECK(close(p.re, om2 * (one + rt2), prec - 24));
  CHECK(close(p.im, zero, prec - 24));
  CHECK(close(q.re, -(om2 * om * (one + rt2) * rt2 * 2L), prec - 24));
  CHECK(close(q.im, zero, prec - 24));
}

TEST_CASE("wp satisfies the differential equation at 0/1/2 halvings") {
  for (long prec : {256L, 1024L}) {
    WpContext W(prec);
    Real g2 = W.g2();
    // |z| = .316 (no halving), .492 (one), .689 boundary (one), .700 (two)
    const char* pts[][2] = {
        {"0.3", "0.1"}, {"0.45", "-0.2"}, {"0.48", "0.495"}, {"0.5", "0.49"}};
    for (auto& pt : pts) {
      BigComplex z = C(pt[0], pt[1], prec);
      BigComplex p(prec), q(prec);
      W.wp_wpprime(z, p, q);
      BigComplex g2c(static_cast<mpfr_prec_t>(prec));
      mpfr_set(g2c.re.raw(), g2.raw(), MPFR_RNDN);
      BigComplex resid = q * q - (p * p * p * Real::from_si(4, prec) - g2c * p);
      // relative to max(1, |p|^3)
      Real scale = abs(p);
      scale = scale * scale * scale + Real::from_si(1, prec);
      Real tol(prec);
      mpfr_mul_2si(tol.raw(), scale.raw(), -(prec - 40), MPFR_RNDN);
      CHECK(cmp(abs(resid.re), tol) <= 0);
      CHECK(cmp(abs(resid.im), tol) <= 0);
    }
  }
}

TEST_CASE("wp symmetries") {
  const long prec = 320;
  WpContext W(prec);
  const char* pts[][2] = {{"0.23", "0.17"}, {"0.41", "0.33"}};
  for (auto& pt : pts) {
    BigComplex z = C(pt[0], pt[1], prec);
    BigComplex p(prec), q(prec), p2(prec), q2(prec);
    W.wp_wpprime(z, p, q);

    // Evenness / oddness.
    W.wp_wpprime(-z, p2, q2);
    CHECK(cclose(p2, p, prec - 24));
    CHECK(cclose(q2, -q, prec - 24));

    // Complex multiplication by i: wp(iz) = -wp(z), wp'(iz) = i wp'(z).
    W.wp_wpprime(mul_i(z), p2, q2);
    CHECK(cclose(p2, -p, prec - 24));
    CHECK(cclose(q2, mul_i(q), prec - 24));

    // Real lattice: wp(conj z) = conj wp(z).
    W.wp_wpprime(conj(z), p2, q2);
    CHECK(cclose(p2, conj(p), prec - 24));
    CHECK(cclose(q2, conj(q), prec - 24));

    // Periodicity via reduction.
    BigComplex shift = z + BigComplex::from_gauss(GaussInt(3, -2), prec);
    W.wp_wpprime(shift, p2, q2);
    CHECK(cclose(p2, p, prec - 24));
    CHECK(cclose(q2, q, prec - 24));
  }
}

TEST_CASE("duplication law including the chain-rule factor 1/2") {
  const long prec = 512;
  WpContext W(prec);
  // Both z and 2z lie inside the series radius, so wp_wpprime uses no
  // internal duplication for either; the formulas are checked independently.
  BigComplex z = C("0.12", "0.07", prec);
  BigComplex z2 = z + z;
  BigComplex p(prec), q(prec), P(prec), Q(prec);
  W.wp_wpprime(z, p, q);
  W.wp_wpprime(z2, P, Q);

  Real e(prec);
  mpfr_set(e.raw(), W.e2().raw(), MPFR_RNDN);
  CHECK(cclose(P, dup_R(p, e), prec - 32));
  CHECK(cclose(Q, dup_Rprime(p, e) * q / Real::from_si(2, prec), prec - 32));
  // And the wrong variant (without /2) must NOT match.
  CHECK(!cclose(Q, dup_Rprime(p, e) * q, prec - 32));
}

TEST_CASE("lattice points are rejected") {
  const long prec = 256;
  WpContext W(prec);
  BigComplex p(prec), q(prec);
  CHECK_THROWS_AS(W.wp_wpprime(C("0", "0", prec), p, q), input_error);
  CHECK_THROWS_AS(W.wp_wpprime(C("1", "0", prec), p, q), input_error);
  CHECK_THROWS_AS(W.wp_wpprime(C("3", "-2", prec), p, q), input_error);
  try {
    W.wp_wpprime(C("1", "0", prec), p, q);
  } catch (const input_error& e) {
    CHECK(e.code() == errc::lattice_point);
  }

  // Extremely near-lattice input is also rejected...
  BigComplex tiny(prec);
  mpfr_set_ui_2exp(tiny.re.raw(), 1, -300, MPFR_RNDN);
  CHECK_THROWS_AS(W.wp_wpprime(tiny, p, q), input_error);
  // ...but a merely small offset evaluates to a huge finite value.
  mpfr_set_ui_2exp(tiny.re.raw(), 1, -100, MPFR_RNDN);
  W.wp_wpprime(tiny, p, q);
  CHECK(mpfr_number_p(p.re.raw()) != 0);
  CHECK(mpfr_cmp_d(p.re.raw(), 1e59) > 0);  // ~ 2^200
}

}  // TEST_SUITE
