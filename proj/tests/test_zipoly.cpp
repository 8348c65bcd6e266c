#include "cmlv/zipoly.hpp"

#include <random>

#include "cmlv/errors.hpp"
#include "doctest.h"

using namespace cmlv;

namespace {

ZiPoly P(std::vector<std::pair<long, long>> cs, long den = 1) {
  std::vector<GaussInt> v;
  v.reserve(cs.size());
  for (auto& [r, i] : cs) v.emplace_back(r, i);
  return ZiPoly(std::move(v), mpz_class(den));
}

ZiPoly random_poly(std::mt19937_64& rng, long maxdeg) {
  std::uniform_int_distribution<long> deg(0, maxdeg), c(-9, 9);
  std::vector<GaussInt> v;
  long d = deg(rng);
  for (long m = 0; m <= d; ++m) v.emplace_back(c(rng), c(rng));
  std::uniform_int_distribution<long> den(1, 12);
  return ZiPoly(std::move(v), mpz_class(den(rng)));
}

}  // namespace

TEST_SUITE("zipoly") {

TEST_CASE("normalization") {
  // Trailing zeros are stripped.
  ZiPoly a = P({{1, 0}, {2, 3}, {0, 0}, {0, 0}});
  CHECK(a.degree() == 1);
  CHECK(a.coeff(1) == GaussInt(2, 3));
  CHECK(a.coeff(7) == GaussInt(0, 0));

  // Zero polynomial.
  ZiPoly z = P({{0, 0}}, 5);
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.denom == 1);

  // Content/denominator cancellation and denom > 0.
  ZiPoly b = P({{4, 0}, {2, 0}}, 6);  // (2X+4)/6 -> (X+2)/3
  CHECK(b == P({{2, 0}, {1, 0}}, 3));
  ZiPoly c = P({{1, 0}}, -2);  // 1/-2 -> -1/2
  CHECK(c.denom == 2);
  CHECK(c.coeff(0) == GaussInt(-1, 0));

  // Gaussian content that is not a rational integer is kept.
  ZiPoly d = P({{2, 4}, {6, 0}}, 2);
  CHECK(d == P({{1, 2}, {3, 0}}, 1));

  CHECK_THROWS_AS(P({{1, 0}}, 0), input_error);
}

TEST_CASE("ring operations") {
  // (X+i)(X-i) = X^2 + 1
  ZiPoly xi = P({{0, 1}, {1, 0}});
  ZiPoly xmi = P({{0, -1}, {1, 0}});
  CHECK(xi * xmi == P({{1, 0}, {0, 0}, {1, 0}}));

  // (X + (1+i))^2 = X^2 + (2+2i)X + 2i
  ZiPoly s = P({{1, 1}, {1, 0}});
  CHECK(s * s == P({{0, 2}, {2, 2}, {1, 0}}));

  // Denominators: X/2 + 1/3 = (3X + 2)/6
  CHECK(P({{0, 0}, {1, 0}}, 2) + P({{1, 0}}, 3) == P({{2, 0}, {3, 0}}, 6));

  // a - a = 0 with mixed denominators.
  ZiPoly a = P({{5, -7}, {0, 2}, {3, 3}}, 4);
  CHECK((a - a).is_zero());

  // Distributivity on random inputs.
  std::mt19937_64 rng(20260816u);
  for (int t = 0; t < 60; ++t) {
    ZiPoly u = random_poly(rng, 6), v = random_poly(rng, 6), w = random_poly(rng, 6);
    CHECK((u + v) * w == u * w + v * w);
    CHECK(u * v == v * u);
  }

  // X^k helper.
  CHECK(zipoly_xpow(3) == P({{0, 0}, {0, 0}, {0, 0}, {1, 0}}));
}

TEST_CASE("derivative and conjugate") {
  // d/dX (X^3 + (2+i)X)/5 = (3X^2 + (2+i))/5
  ZiPoly a = P({{0, 0}, {2, 1}, {0, 0}, {1, 0}}, 5);
  CHECK(derivative(a) == P({{2, 1}, {0, 0}, {3, 0}}, 5));
  CHECK(derivative(P({{7, 2}})).is_zero());

  CHECK(conj(P({{1, 2}, {-3, 4}}, 3)) == P({{1, -2}, {-3, -4}}, 3));

  // content
  CHECK(content_z(P({{2, 4}, {6, 0}})) == 2);
  CHECK(content_z(ZiPoly()) == 0);
}

TEST_CASE("polmod by a monic integral modulus") {
  ZiPoly g = P({{1, 0}, {0, 0}, {1, 0}});  // X^2 + 1

  // X^4 mod (X^2+1) = 1
  CHECK(polmod(zipoly_xpow(4), g) == P({{1, 0}}));
  // (X^3 + 2X)/7 mod (X^2+1) = X/7
  CHECK(polmod(P({{0, 0}, {2, 0}, {0, 0}, {1, 0}}, 7), g) == P({{0, 0}, {1, 0}}, 7));
  // Degree already lower: unchanged.
  ZiPoly small = P({{3, -1}, {2, 2}}, 5);
  CHECK(polmod(small, g) == small);

  // Non-monic or fractional moduli are rejected.
  CHECK_THROWS_AS(polmod(small, P({{1, 0}, {2, 0}})), input_error);
  CHECK_THROWS_AS(polmod(small, P({{1, 0}, {0, 0}, {2, 0}}, 2)), input_error);
  CHECK_THROWS_AS(polmod(small, ZiPoly()), input_error);

  // a*g + r mod g == r mod g on random inputs (monic random g).
  std::mt19937_64 rng(77u);
  for (int t = 0; t < 40; ++t) {
    ZiPoly q = random_poly(rng, 5);
    ZiPoly r = random_poly(rng, 3);
    ZiPoly gm = random_poly(rng, 3);
    std::vector<GaussInt> gc = gm.coeffs;
    gc.resize(5, GaussInt(0, 0));
    gc[4] = GaussInt(1, 0);
    ZiPoly G(std::move(gc), mpz_class(1) * gm.denom);  // force monic denom-1
    G.denom = 1;
    G.normalize();
    if (!G.is_monic_integral()) continue;
    CHECK(polmod(q * G + r, G) == polmod(r, G));
  }
}

TEST_CASE("evaluation") {
  // (X^2 + 1)/2 at 1+i: ((1+i)^2 + 1)/2 = (1 + 2i)/2
  ZiPoly a = P({{1, 0}, {0, 0}, {1, 0}}, 2);
  const long prec = 128;
  BigComplex z = BigComplex::from_gauss(GaussInt(1, 1), prec);
  BigComplex v = eval_complex(a, z);
  CHECK(std::abs(v.re.to_double() - 0.5) < 1e-30);
  CHECK(std::abs(v.im.to_double() - 1.0) < 1e-30);

  // Numerator-only Horner over Z[i].
  CHECK(eval_gauss_numerator(a, GaussInt(1, 1)) == GaussInt(1, 2));
  CHECK(eval_gauss_numerator(ZiPoly(), GaussInt(3, 2)) == GaussInt(0, 0));

  // Complex evaluation agrees with exact evaluation on random data.
  std::mt19937_64 rng(5u);
  for (int t = 0; t < 20; ++t) {
    ZiPoly p = random_poly(rng, 6);
    GaussInt x(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3);
    GaussInt exact = eval_gauss_numerator(p, x);
    BigComplex num = eval_complex(p, BigComplex::from_gauss(x, prec)) *
                     Real::from_mpz(p.denom, prec);
    Real dr = abs(num.re - Real::from_mpz(exact.re, prec));
    Real di = abs(num.im - Real::from_mpz(exact.im, prec));
    CHECK(mpfr_cmp_d(dr.raw(), 1e-20) < 0);
    CHECK(mpfr_cmp_d(di.raw(), 1e-20) < 0);
  }
}

}  // TEST_SUITE
