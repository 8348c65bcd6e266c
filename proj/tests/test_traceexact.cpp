#include "cmlv/traceexact.hpp"

#include <vector>

#include "cmlv/errors.hpp"
#include "doctest.h"

using namespace cmlv;

namespace {

ZiPoly monic_from_roots(const std::vector<GaussInt>& roots) {
  ZiPoly p(std::vector<GaussInt>{GaussInt(1, 0)});
  for (const GaussInt& r : roots) {
    p = p * ZiPoly(std::vector<GaussInt>{-r, GaussInt(1, 0)});
  }
  return p;
}

const PrecompBundle& bundle_d3() {
  static PrecompBundle b = build_bundle(make_params(3));
  return b;
}

const PrecompBundle& bundle_d5() {
  static PrecompBundle b = build_bundle(make_params(5));
  return b;
}

}  // namespace

TEST_SUITE("traceexact") {

TEST_CASE("newton power sums of (X-1)(X-2)") {
  // X^2 - 3X + 2, roots 1 and 2: s_m = 1 + 2^m, beyond the degree too.
  ZiPoly g(std::vector<GaussInt>{GaussInt(2, 0), GaussInt(-3, 0), GaussInt(1, 0)});
  PowerSums ps = newton_power_sums(g, 6);
  REQUIRE(ps.s.size() == 6);
  long expect[] = {2, 3, 5, 9, 17, 33};
  for (int m = 0; m < 6; ++m) CHECK(ps.s[static_cast<std::size_t>(m)] == GaussInt(expect[m], 0));

  CHECK(newton_power_sums(g, 0).s.empty());

  // Non-monic and non-integral inputs are rejected.
  ZiPoly bad1(std::vector<GaussInt>{GaussInt(1, 0), GaussInt(2, 0)});
  CHECK_THROWS_AS(newton_power_sums(bad1, 3), input_error);
  ZiPoly bad2(std::vector<GaussInt>{GaussInt(3, 0), GaussInt(1, 0)}, mpz_class(2));
  CHECK_THROWS_AS(newton_power_sums(bad2, 3), input_error);
  CHECK_THROWS_AS(newton_power_sums(g, -1), input_error);
}

TEST_CASE("newton power sums match direct sums over Gaussian roots") {
  std::vector<GaussInt> roots = {GaussInt(1, 1),  GaussInt(2, -1), GaussInt(0, 3),
                                 GaussInt(-1, 2), GaussInt(3, 0),  GaussInt(-2, -2)};
  ZiPoly g = monic_from_roots(roots);
  REQUIRE(g.degree() == 6);
  const long count = 12;  // beyond the degree: exercises sigma_h = 0 padding
  PowerSums ps = newton_power_sums(g, count);
  for (long m = 0; m < count; ++m) {
    GaussInt direct(0, 0);
    for (const GaussInt& r : roots) direct = direct + gpow(r, static_cast<unsigned long>(m));
    CHECK(ps.s[static_cast<std::size_t>(m)] == direct);
  }
}

TEST_CASE("B_n fixtures for small n") {
  for (long long D : {17LL, -14LL, 3LL, 5LL}) {
    CAPTURE(D);
    BnPoly b0 = bn_poly_exact(D, 0);
    REQUIRE(b0.coeffs.size() == 1);
    CHECK(b0.coeffs[0] == 1);

    // B_1 = 12 X
    BnPoly b1 = bn_poly_exact(D, 1);
    REQUIRE(b1.coeffs.size() == 2);
    CHECK(b1.coeffs[0] == 0);
    CHECK(b1.coeffs[1] == 12);

    // B_2 = 360 X^2 - 72 D
    BnPoly b2 = bn_poly_exact(D, 2);
    REQUIRE(b2.coeffs.size() == 3);
    CHECK(b2.coeffs[0] == mpz_class(static_cast<long>(-72 * D)));
    CHECK(b2.coeffs[1] == 0);
    CHECK(b2.coeffs[2] == 360);

    // B_3 = 20160 X^3 - 8064 D X
    BnPoly b3 = bn_poly_exact(D, 3);
    REQUIRE(b3.coeffs.size() == 4);
    CHECK(b3.coeffs[0] == 0);
    CHECK(b3.coeffs[1] == mpz_class(static_cast<long>(-8064 * D)));
    CHECK(b3.coeffs[2] == 0);
    CHECK(b3.coeffs[3] == 20160);

    // Parity law on a larger instance.
    BnPoly b9 = bn_poly_exact(D, 9);
    for (std::size_t m = 0; m < b9.coeffs.size(); ++m) {
      if ((static_cast<long>(m) - 9) % 2 != 0) CHECK(b9.coeffs[m] == 0);
    }
  }
  CHECK_THROWS_AS(bn_poly_exact(17, -1), input_error);
}

TEST_CASE("bn_poly_via_diffop reproduces bn_poly_exact") {
  for (long long D : {17LL, -14LL, 3LL, 5LL}) {
    CAPTURE(D);
    for (long n = 0; n <= 13; ++n) {
      BnPoly a = bn_poly_exact(D, n);
      BnPoly b = bn_poly_via_diffop(D, n);
      CHECK(a.n == b.n);
      CHECK(a.coeffs == b.coeffs);
    }
  }
}

TEST_CASE("B_13 leading coefficient") {
  // lead(B_13) = 14 * lambda_13 = 1212046875 * 7496723869173 * 2^24.
  mpz_class lead = mpz_class("1212046875") * mpz_class("7496723869173");
  lead <<= 24;
  for (long long D : {17LL, -14LL}) {
    BnPoly b = bn_poly_exact(D, 13);
    REQUIRE(b.coeffs.size() == 14);
    CHECK(b.coeffs[13] == lead);
  }
}

TEST_CASE("xi and cp reject bad primes and out-of-range requests") {
  const PrecompBundle& b3 = bundle_d3();
  const PrecompBundle& b5 = bundle_d5();

  CHECK_THROWS_AS(xi_p_exact(b3, 4), input_error);    // composite
  CHECK_THROWS_AS(xi_p_exact(b3, 7), input_error);    // p = 3 (mod 4)
  CHECK_THROWS_AS(xi_p_exact(b3, 3), input_error);    // p < 5 and p | 2D
  CHECK_THROWS_AS(xi_p_exact(b5, 5), input_error);    // p | 2D (D = 5)
  CHECK_THROWS_AS(cp_plus_exact(b3, 109), input_error);  // beyond exact_pmax

  try {
    xi_p_exact(b5, 5);
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(e.code() == errc::bad_prime);
  }
  try {
    cp_plus_exact(b3, 109);
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(e.code() == errc::bad_argument);
  }
}

TEST_CASE("cp_plus_exact structural properties on D=3 and D=5") {
  struct Case {
    const PrecompBundle* b;
    std::vector<long long> ps;
  };
  std::vector<Case> cases = {{&bundle_d3(), {5, 13, 17, 29, 37, 41}},
                             {&bundle_d5(), {13, 17, 29, 37, 41}}};
  for (const Case& c : cases) {
    for (long long p : c.ps) {
      CAPTURE(c.b->params.D);
      CAPTURE(p);
      ExactCp e = cp_plus_exact(*c.b, p);
      CHECK(e.res.p == p);
      CHECK(e.res.k == -1);
      CHECK(e.value != 0);
      CHECK(e.res.ord >= 0);
      CHECK_FALSE(e.res.ord_saturated);

      // Denominator of the exact value is prime to p.
      CHECK(mpz_fdiv_ui(e.value.get_den().get_mpz_t(),
                        static_cast<unsigned long>(p)) != 0);

      CHECK(e.res.unit_defined);
      CHECK(e.res.unit_digit >= 1);
      CHECK(e.res.unit_digit <= p - 1);

      CHECK(e.res.exceptional == (e.res.ord > 2));
      CHECK(e.res.table_defined == (e.res.ord >= 2));
      if (e.res.ord == 2) CHECK(e.res.table_digit == e.res.unit_digit);
      if (e.res.ord > 2) CHECK(e.res.table_digit == 0);

      bool gd = good_ordinary_ok(c.b->params.D, p);
      if (e.res.ord >= 4) {
        CHECK(e.res.verdict == Verdict::Inconclusive);
      } else if (e.res.ord == 2 && gd) {
        CHECK(e.res.verdict == Verdict::ShaTrivialAtP);
      }
      CHECK(e.res.m_p_bound_note == "m_p >= 2");
    }
  }
}

TEST_CASE("cp_plus_exact is independent of the build precision") {
  CurveParams params = make_params(3);
  PrecompBundle lo = build_bundle_at(params, 1024);
  PrecompBundle hi = build_bundle_at(params, 2048);
  for (long long p : {5LL, 13LL}) {
    ExactCp a = cp_plus_exact(lo, p);
    ExactCp b = cp_plus_exact(hi, p);
    CHECK(a.value == b.value);
    CHECK(a.res.ord == b.res.ord);
    CHECK(a.res.unit_digit == b.res.unit_digit);
  }
}

TEST_CASE("options are honored") {
  const PrecompBundle& b3 = bundle_d3();
  CpOptions opt;
  opt.rank = 0;
  ExactCp e = cp_plus_exact(b3, 13, opt);
  // With rank 0 every positive ord is exceptional.
  CHECK(e.res.exceptional == (e.res.ord > 0));
  CHECK(e.res.m_p_bound_note == "m_p >= 0");

  opt.rank = 2;
  opt.parity_ok = false;
  ExactCp f = cp_plus_exact(b3, 13, opt);
  CHECK(f.res.verdict == Verdict::Inconclusive);
  CHECK(f.res.m_p_bound_note.empty());

  opt.parity_ok = true;
  opt.exact_pmax = 11;
  CHECK_THROWS_AS(cp_plus_exact(b3, 13, opt), input_error);
}

TEST_CASE("good ordinary flag") {
  CHECK(good_ordinary_ok(17, 13));
  CHECK(good_ordinary_ok(17, 97));
  // p = 5: decided by the point count a_5; the check must agree with it.
  for (long long D : {17LL, -14LL, 3LL}) {
    long long a5 = ap_point_count(D, 5);
    CHECK(good_ordinary_ok(D, 5) == ((6 - a5) % 5 != 0));
  }
}

}  // TEST_SUITE
