#include "cmlv/traceexact.hpp"

#include "cmlv/errors.hpp"
#include "cmlv/intarith.hpp"

namespace cmlv {

PowerSums newton_power_sums(const ZiPoly& G, long count) {
  if (!G.is_monic_integral()) {
    throw input_error(errc::bad_argument, "newton_power_sums: G must be monic with denom 1");
  }
  if (count < 0) throw input_error(errc::bad_argument, "newton_power_sums: count < 0");
  const long d = G.degree();
  PowerSums out;
  out.s.reserve(static_cast<std::size_t>(count));
  if (count == 0) return out;
  out.s.emplace_back(d, 0);  // s_0 = d

  // sigma_h = (-1)^h * coeff(d - h), h = 1..d; 0 beyond.
  auto sigma = [&](long h) -> GaussInt {
    if (h < 1 || h > d) return GaussInt(0, 0);
    GaussInt c = G.coeff(static_cast<std::size_t>(d - h));
    return (h % 2 == 0) ? c : -c;
  };

  for (long m = 1; m < count; ++m) {
    GaussInt acc = sigma(m) * mpz_class((m % 2 == 1) ? m : -m);
    for (long h = 1; h < m; ++h) {
      GaussInt t = out.s[static_cast<std::size_t>(m - h)] * sigma(h);
      acc = (h % 2 == 1) ? acc + t : acc - t;
    }
    out.s.push_back(acc);
  }
  return out;
}

namespace {

void check_bn_invariants(const BnPoly& b, const mpz_class& lambda_n) {
  for (std::size_t m = 0; m < b.coeffs.size(); ++m) {
    if (b.coeffs[m] != 0 && (static_cast<long>(m) - b.n) % 2 != 0) {
      throw verify_error("bn_poly: parity law violated at n=" + std::to_string(b.n));
    }
  }
  if (b.n >= 1) {
    mpz_class lead_expected = lambda_n * (b.n + 1);
    if (b.coeffs.empty() || b.coeffs.back() != lead_expected) {
      throw verify_error("bn_poly: leading-coefficient law violated at n=" +
                         std::to_string(b.n));
    }
  }
}

}  // namespace

BnPoly bn_poly_exact(long long D, long n) {
  if (n < 0) throw input_error(errc::bad_argument, "bn_poly_exact: n < 0");
  BnPoly b;
  b.n = 0;
  b.coeffs = {mpz_class(1)};
  if (n == 0) return b;

  const mpz_class twoD = mpz_class(static_cast<long>(D)) * 2;
  mpz_class lambda = 6;  // lambda_1
  for (long step = 0; step < n; ++step) {
    // b currently holds B_step; produce B_{step+1}.
    std::vector<mpz_class> next(static_cast<std::size_t>(step + 2), mpz_class(0));
    for (long m = 0; m <= step + 1; ++m) {
      mpz_class acc = 0;
      if (m - 1 >= 0 && m - 1 <= step) {
        acc += b.coeffs[static_cast<std::size_t>(m - 1)] *
               static_cast<long>((m + 1) * (4 * m + 2));
      }
      if (m + 1 <= step) {
        acc -= twoD * static_cast<long>((m + 1) * (2 * m + 3)) *
               b.coeffs[static_cast<std::size_t>(m + 1)];
      }
      next[static_cast<std::size_t>(m)] = acc;
    }
    b.coeffs = std::move(next);
    b.n = step + 1;
    if (b.n >= 2) lambda *= static_cast<long>(b.n * (4 * b.n + 2));  // lambda_{n} from lambda_{n-1}
    check_bn_invariants(b, lambda);
  }
  return b;
}

namespace {

std::vector<mpz_class> zderiv(const std::vector<mpz_class>& a) {
  std::vector<mpz_class> r(a.size() > 1 ? a.size() - 1 : 0);
  for (std::size_t j = 1; j < a.size(); ++j) r[j - 1] = a[j] * static_cast<long>(j);
  return r;
}

// acc += scale * X^shift * a
void add_shifted(std::vector<mpz_class>& acc, const std::vector<mpz_class>& a,
                 std::size_t shift, const mpz_class& scale) {
  for (std::size_t j = 0; j < a.size(); ++j) acc[j + shift] += a[j] * scale;
}

}  // namespace

BnPoly bn_poly_via_diffop(long long D, long n) {
  if (n < 0) throw input_error(errc::bad_argument, "bn_poly_via_diffop: n < 0");
  // wp^(2n+3) = d^2/dz^2 (wp' B_n(wp)) = wp' B_{n+1}(wp) with
  // B_{n+1} = 12 X B_n + (18 X^2 - 6D) B_n' + (4 X^3 - 4 D X) B_n''
  // on the scaled curve wp'^2 = 4 wp^3 - 4 D wp (g2 = 4D, g3 = 0).
  const mpz_class Dz(static_cast<long>(D));
  std::vector<mpz_class> p = {mpz_class(1)};
  for (long cur = 0; cur < n; ++cur) {
    std::vector<mpz_class> d1 = zderiv(p);
    std::vector<mpz_class> d2 = zderiv(d1);
    std::vector<mpz_class> next(p.size() + 1, mpz_class(0));
    add_shifted(next, p, 1, mpz_class(12));
    add_shifted(next, d1, 2, mpz_class(18));
    add_shifted(next, d1, 0, Dz * -6);
    add_shifted(next, d2, 3, mpz_class(4));
    add_shifted(next, d2, 1, Dz * -4);
    p = std::move(next);
  }
  BnPoly b;
  b.n = n;
  b.coeffs = std::move(p);
  return b;
}

namespace {

void check_prime_for_curve(const CurveParams& params, long long p) {
  if (p < 5 || !is_prime_u64(static_cast<unsigned long long>(p)) || p % 4 != 1) {
    throw input_error(errc::bad_prime,
                      "p must be a prime = 1 (mod 4), p >= 5; got " + std::to_string(p));
  }
  mpz_class nfa = norm(params.f_alpha);
  if (mpz_divisible_ui_p(nfa.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    throw input_error(errc::bad_prime,
                      "p = " + std::to_string(p) + " divides 2D (bad reduction)");
  }
}

}  // namespace

XiExact xi_p_exact(const PrecompBundle& bundle, long long p) {
  check_prime_for_curve(bundle.params, p);
  const long n = static_cast<long>((p - 3) / 2);
  BnPoly B = bn_poly_exact(bundle.params.D, n);

  std::vector<GaussInt> bc(B.coeffs.size());
  for (std::size_t m = 0; m < B.coeffs.size(); ++m) bc[m] = GaussInt(B.coeffs[m], 0);
  ZiPoly Bz(std::move(bc));
  if (Bz.denom != 1) throw verify_error("xi_p_exact: B_n must be integral");

  ZiPoly A = polmod(Bz * bundle.J, bundle.G);
  if (A.degree() >= static_cast<long>(bundle.power_sums.size())) {
    throw verify_error("xi_p_exact: not enough power sums in bundle");
  }
  GaussInt num(0, 0);
  for (std::size_t m = 0; m < A.coeffs.size(); ++m) {
    num = num + A.coeffs[m] * bundle.power_sums[m];
  }
  return XiExact{num, A.denom};
}

bool good_ordinary_ok(long long D, long long p) {
  if (p == 5) {
    // order of E(F_5) = 5 + 1 - a_5 must be prime to 5
    long long a5 = ap_point_count(D, 5);
    return (6 - a5) % 5 != 0;
  }
  return p > 5;
}

void fill_result_from_rational(CpResult& res, const mpq_class& c, long long p,
                               const CpOptions& opt, bool good_ordinary) {
  if (c == 0) throw verify_error("c_p^+ vanishes unexpectedly at p=" + std::to_string(p));
  const mpz_class& num = c.get_num();
  const mpz_class& den = c.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    throw verify_error("denominator of c_p^+ is divisible by p=" + std::to_string(p));
  }
  mpz_class u;
  res.ord = static_cast<long>(
      mpz_remove(u.get_mpz_t(), num.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t()));
  res.ord_saturated = false;

  mpz_class pz(static_cast<long>(p));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0) {
    throw verify_error("no inverse for denominator mod p");
  }
  mpz_class digit = (u * dinv) % pz;
  if (digit < 0) digit += pz;
  res.unit_digit = digit.get_si();
  res.unit_defined = true;

  if (res.ord >= opt.rank) {
    res.table_digit = (res.ord == opt.rank) ? res.unit_digit : 0;
    res.table_defined = true;
  } else {
    res.table_digit = 0;
    res.table_defined = false;
  }
  res.exceptional = res.ord > opt.rank;
  res.verdict = decide_verdict(res.ord, res.ord_saturated, opt.rank, opt.parity_ok,
                               good_ordinary);
  res.m_p_bound_note = m_p_bound_note_for(opt.rank, opt.parity_ok);
}

ExactCp cp_plus_exact(const PrecompBundle& bundle, long long p, const CpOptions& opt) {
  if (p > opt.exact_pmax) {
    throw input_error(errc::bad_argument,
                      "exact path is limited to p <= " + std::to_string(opt.exact_pmax) +
                          "; use the modular path");
  }
  ExactCp out;
  out.xi = xi_p_exact(bundle, p);

  // W = 4 (p-1)! (f alpha)^p ;  c = -sign(D) Xi conj(W) / (den(Xi) N(W)).
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(p - 1));
  GaussInt W = gpow(bundle.params.f_alpha, static_cast<unsigned long>(p)) * (fact * 4);
  GaussInt cnum = out.xi.num * conj(W);
  if (bundle.params.D > 0) cnum = -cnum;
  if (cnum.im != 0) {
    throw verify_error("c_p^+ has a nonzero imaginary part at p=" + std::to_string(p));
  }
  mpq_class c(cnum.re, out.xi.den * norm(W));
  c.canonicalize();
  out.value = c;

  out.res.p = p;
  out.res.k = -1;
  fill_result_from_rational(out.res, c, p, opt, good_ordinary_ok(bundle.params.D, p));
  return out;
}

}  // namespace cmlv
