#include "cmlv/algprecomp.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "cmlv/errors.hpp"
#include "cmlv/intarith.hpp"
#include "cmlv/traceexact.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmlv {

namespace {

constexpr long kRampCapBits = 1L << 20;
constexpr long kToleranceBits = 32;  // rounding/residual gate: 2^-32

struct BuildFailure : verify_error {
  using verify_error::verify_error;
};

Real tolerance(mpfr_prec_t prec) {
  Real t(prec);
  mpfr_set_ui_2exp(t.raw(), 1, -kToleranceBits, MPFR_RNDN);
  return t;
}

long exp_of(const Real& x) {
  if (mpfr_zero_p(x.raw()) != 0 || mpfr_number_p(x.raw()) == 0) return 0;
  return static_cast<long>(mpfr_get_exp(x.raw()));
}

// ---------------------------------------------------------------------------
// Conjugate points.
// ---------------------------------------------------------------------------

void eval_point(const CurveParams& params, const WpContext& W,
                const BigComplex& f_c, const BigComplex& oinf2,
                const BigComplex& oinf3, const IdealRep& rep, BigComplex& u_out,
                BigComplex& wpp_out) {
  GaussInt character = psi(params, rep);
  mpfr_prec_t prec = f_c.prec();
  BigComplex z = BigComplex::from_gauss(character, prec) / f_c;
  BigComplex p(prec), q(prec);
  W.wp_wpprime(z, p, q);
  u_out = p / oinf2;
  wpp_out = q / oinf3;
}

// ---------------------------------------------------------------------------
// G: monic product, rounding, symmetry, separability.
// ---------------------------------------------------------------------------

// Monic product prod (X - u_j) in complex arithmetic; coeff index = degree.
std::vector<BigComplex> poly_from_roots(const std::vector<BigComplex>& roots,
                                        long prec) {
  std::vector<BigComplex> c;
  c.reserve(roots.size() + 1);
  BigComplex one(prec);
  mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
  c.push_back(one);
  for (const BigComplex& r : roots) {
    c.emplace_back(prec);  // extend by one degree; new top slot is zero
    for (std::size_t i = c.size(); i-- > 0;) {
      // new c[i] = old c[i-1] - r * old c[i]  (descending keeps c[i-1] old)
      if (i == 0) {
        c[0] = -(r * c[0]);
      } else {
        c[i] = c[i - 1] - r * c[i];
      }
    }
  }
  return c;
}

GaussInt round_gauss(const BigComplex& z, Real& maxres) {
  Real r1(z.prec()), r2(z.prec());
  mpz_class re = round_to_mpz(z.re, &r1);
  mpz_class im = round_to_mpz(z.im, &r2);
  if (cmp(r1, maxres) > 0) maxres = r1;
  if (cmp(r2, maxres) > 0) maxres = r2;
  return GaussInt(std::move(re), std::move(im));
}

void check_conj_closure(const ZiPoly& G, const CurveParams& params) {
  const long d = G.degree();
  long long D = params.D;
  bool d_is_1_mod_4 = ((D % 4) + 4) % 4 == 1;
  // Cases (i) D>0, D=1(4) and (iv) D<0, D!=1(4): conj(c_j) = (-1)^(d-j) c_j.
  // Cases (ii) and (iii): conj(G) = G, i.e. all coefficients real.
  bool alternating = (D > 0 && d_is_1_mod_4) || (D < 0 && !d_is_1_mod_4);
  for (long j = 0; j <= d; ++j) {
    const GaussInt& c = G.coeff(static_cast<std::size_t>(j));
    bool bad;
    if (alternating) {
      bad = ((d - j) % 2 == 0) ? (c.im != 0) : (c.re != 0);
    } else {
      bad = (c.im != 0);
    }
    if (bad) {
      throw BuildFailure("conjugation symmetry of G violated at coefficient " +
                         std::to_string(j));
    }
  }
}

std::vector<unsigned long long> reduce_mod_q(const ZiPoly& G, unsigned long long q,
                                             unsigned long long r) {
  std::vector<unsigned long long> v(G.coeffs.size());
  for (std::size_t i = 0; i < G.coeffs.size(); ++i) {
    unsigned long long re = mpz_fdiv_ui(G.coeffs[i].re.get_mpz_t(), q);
    unsigned long long im = mpz_fdiv_ui(G.coeffs[i].im.get_mpz_t(), q);
    v[i] = (re + mulmod_u64(im, r, q)) % q;
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

void strip_qpoly(std::vector<unsigned long long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void qpoly_mod(std::vector<unsigned long long>& a,
               const std::vector<unsigned long long>& b, unsigned long long q) {
  unsigned long long binv = powmod_u64(b.back(), q - 2, q);
  while (a.size() >= b.size()) {
    unsigned long long f = mulmod_u64(a.back(), binv, q);
    if (f != 0) {
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j + 1 < b.size(); ++j) {
        unsigned long long s = mulmod_u64(f, b[j], q);
        a[off + j] = (a[off + j] + q - s) % q;
      }
    }
    a.pop_back();
    strip_qpoly(a);
  }
}

bool gcd_is_one_mod_q(std::vector<unsigned long long> a,
                      std::vector<unsigned long long> b, unsigned long long q) {
  strip_qpoly(a);
  strip_qpoly(b);
  while (!b.empty()) {
    qpoly_mod(a, b, q);
    std::swap(a, b);
  }
  return a.size() == 1;  // nonzero constant
}

// One-sided certificate: gcd(G, G') = 1 modulo a random split prime proves
// separability over Q(i).
void check_separable(const ZiPoly& G, long long seed_d) {
  std::mt19937_64 rng(0x636d6c76ULL ^
                      static_cast<unsigned long long>(seed_d * 2654435761LL));
  for (int attempt = 0; attempt < 3; ++attempt) {
    unsigned long long q = (rng() | (1ULL << 60)) & ((1ULL << 61) - 1);
    q -= q % 4;
    ++q;  // q = 1 (mod 4)
    while (!is_prime_u64(q)) q += 4;
    unsigned long long r = sqrt_minus_one_u64(q);
    std::vector<unsigned long long> g = reduce_mod_q(G, q, r);
    if (g.size() != static_cast<std::size_t>(G.degree()) + 1) continue;
    std::vector<unsigned long long> dg(g.size() - 1);
    for (std::size_t i = 1; i < g.size(); ++i) {
      dg[i - 1] = mulmod_u64(g[i], static_cast<unsigned long long>(i) % q, q);
    }
    if (gcd_is_one_mod_q(g, dg, q)) return;
  }
  throw BuildFailure("G appears inseparable (gcd(G, G') != 1 mod q)");
}

// ---------------------------------------------------------------------------
// J: Lagrange interpolation of the wp' values at the u_j.
// ---------------------------------------------------------------------------

std::vector<BigComplex> lagrange_j(const std::vector<BigComplex>& u,
                                   const std::vector<BigComplex>& wpp,
                                   const ZiPoly& G, long prec) {
  const std::size_t d = u.size();
  std::vector<BigComplex> gc;
  gc.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    gc.push_back(BigComplex::from_gauss(G.coeff(i), prec));
  }
  std::vector<BigComplex> jc(d, BigComplex(prec));
  std::vector<BigComplex> b(d, BigComplex(prec));  // quotient G / (X - u_j)
  for (std::size_t j = 0; j < d; ++j) {
    const BigComplex& x = u[j];
    b[d - 1] = gc[d];  // = 1 (G monic)
    for (std::size_t k = d - 1; k-- > 0;) b[k] = gc[k + 1] + x * b[k + 1];
    // G'(u_j) = q_j(u_j), by Horner on the quotient.
    BigComplex val = b[d - 1];
    for (std::size_t k = d - 1; k-- > 0;) val = val * x + b[k];
    BigComplex w = wpp[j] / val;
    for (std::size_t k = 0; k < d; ++k) jc[k] = jc[k] + w * b[k];
  }
  return jc;
}

// Smallest power N(f)^t that brings every coefficient within 2^-32 of Z[i].
ZiPoly recognize_denominator(const std::vector<BigComplex>& jc, const mpz_class& nf,
                             long prec) {
  Real tol = tolerance(static_cast<mpfr_prec_t>(prec));
  mpz_class scale = 1;
  for (long t = 0; t <= 256; ++t) {
    Real sc = Real::from_mpz(scale, prec);
    Real maxres = Real::from_si(0, prec);
    std::vector<GaussInt> rounded(jc.size());
    bool ok = true;
    for (std::size_t i = 0; i < jc.size(); ++i) {
      BigComplex scaled = jc[i] * sc;
      if (exp_of(scaled.re) > prec - 64 || exp_of(scaled.im) > prec - 64) {
        throw BuildFailure("J denominator recognition exceeded the precision budget");
      }
      rounded[i] = round_gauss(scaled, maxres);
      if (cmp(maxres, tol) > 0) {
        ok = false;
        break;
      }
    }
    if (ok) return ZiPoly(std::move(rounded), scale);
    scale *= nf;
  }
  throw BuildFailure("no power of N(f) clears the denominators of J");
}

ZiPoly j_square_rhs(long long D, const mpz_class& denom) {
  return (zipoly_xpow(3) * mpz_class(4) -
          zipoly_xpow(1) * (mpz_class(static_cast<long>(D)) * 4)) *
         (denom * denom);
}

}  // namespace

ConjugatePoints conjugate_points(const CurveParams& params, long prec_bits,
                                 int threads) {
  std::vector<IdealRep> reps = ray_class_reps(IdealRep{params.f_gen});
  if (static_cast<long>(reps.size()) != params.d) {
    throw verify_error("conjugate_points: ray class count " +
                       std::to_string(reps.size()) +
                       " != d = " + std::to_string(params.d));
  }
  const long d = params.d;
  WpContext W(prec_bits);
  BigComplex oinf = omega_infinity(params.D, prec_bits);
  BigComplex oinf2 = oinf * oinf;
  BigComplex oinf3 = oinf2 * oinf;
  BigComplex f_c = BigComplex::from_gauss(params.f_gen, prec_bits);

  ConjugatePoints out{
      std::vector<BigComplex>(static_cast<std::size_t>(d), BigComplex(prec_bits)),
      std::vector<BigComplex>(static_cast<std::size_t>(d), BigComplex(prec_bits))};

#ifdef _OPENMP
  if (threads != 1) {
    int nt = threads <= 0 ? omp_get_max_threads() : threads;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long j = 0; j < d; ++j) {
      eval_point(params, W, f_c, oinf2, oinf3, reps[static_cast<std::size_t>(j)],
                 out.u[static_cast<std::size_t>(j)],
                 out.wpp[static_cast<std::size_t>(j)]);
    }
    return out;
  }
#else
  (void)threads;
#endif
  for (long j = 0; j < d; ++j) {
    eval_point(params, W, f_c, oinf2, oinf3, reps[static_cast<std::size_t>(j)],
               out.u[static_cast<std::size_t>(j)],
               out.wpp[static_cast<std::size_t>(j)]);
  }
  return out;
}

bool operator==(const PrecompBundle& a, const PrecompBundle& b) {
  return a.params.D == b.params.D && a.G == b.G && a.J == b.J &&
         a.power_sums == b.power_sums;
}

PrecompBundle build_bundle_at(const CurveParams& params, long prec_bits,
                              int threads) {
  const long d = params.d;
  Real tol = tolerance(static_cast<mpfr_prec_t>(prec_bits));
  ConjugatePoints pts = conjugate_points(params, prec_bits, threads);

  // --- G: round the monic product and gate the rounding distance ---
  std::vector<BigComplex> gcomplex = poly_from_roots(pts.u, prec_bits);
  Real maxres = Real::from_si(0, prec_bits);
  std::vector<GaussInt> gcoeffs(gcomplex.size());
  for (std::size_t i = 0; i < gcomplex.size(); ++i) {
    gcoeffs[i] = round_gauss(gcomplex[i], maxres);
  }
  if (cmp(maxres, tol) > 0) {
    throw BuildFailure("G coefficients are not within 2^-32 of Z[i]");
  }
  ZiPoly G(std::move(gcoeffs));
  if (!G.is_monic_integral() || G.degree() != d) {
    throw BuildFailure("G is not monic of degree d after rounding");
  }

  // Relative Horner residual of the exact G at every conjugate point.
  {
    std::vector<BigComplex> gex;
    gex.reserve(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) {
      gex.push_back(
          BigComplex::from_gauss(G.coeff(static_cast<std::size_t>(i)), prec_bits));
    }
    for (const BigComplex& x : pts.u) {
      BigComplex val(prec_bits);
      Real scale = Real::from_si(0, prec_bits);
      Real ax = abs(x);
      for (long i = d + 1; i-- > 0;) {
        val = val * x + gex[static_cast<std::size_t>(i)];
        scale = scale * ax + abs(gex[static_cast<std::size_t>(i)]);
      }
      scale = scale + Real::from_si(1, prec_bits);
      if (cmp(abs(val), scale * tol) > 0) {
        throw BuildFailure("Horner residual of G at a conjugate point exceeds 2^-32");
      }
    }
  }

  check_conj_closure(G, params);
  check_separable(G, params.D);

  // --- J ---
  std::vector<BigComplex> jc = lagrange_j(pts.u, pts.wpp, G, prec_bits);
  ZiPoly J = recognize_denominator(jc, norm(params.f_gen), prec_bits);
  if (J.is_zero() || J.degree() >= d) {
    throw BuildFailure("J has unexpected degree");
  }
  for (std::size_t j = 0; j < pts.u.size(); ++j) {
    BigComplex diff = eval_complex(J, pts.u[j]) - pts.wpp[j];
    Real scale = Real::from_si(1, prec_bits) + abs(pts.wpp[j]);
    if (cmp(abs(diff), scale * tol) > 0) {
      throw BuildFailure("J does not reproduce wp' at a conjugate point");
    }
  }

  // Exact gate: J^2 = (4X^3 - 4DX) denom^2 (mod G) over Z[i].
  {
    ZiPoly Jn(J.coeffs, mpz_class(1));
    ZiPoly gate = polmod(Jn * Jn - j_square_rhs(params.D, J.denom), G);
    if (!gate.is_zero()) {
      throw BuildFailure("exact gate J^2 = 4X^3 - 4DX (mod G) failed");
    }
  }

  // --- power sums: exact Newton plus numeric cross-check ---
  PowerSums ps = newton_power_sums(G, d);
  {
    std::vector<BigComplex> pw(pts.u.size(), BigComplex(prec_bits));
    for (auto& w : pw) mpfr_set_ui(w.re.raw(), 1, MPFR_RNDN);
    for (long m = 0; m < d; ++m) {
      BigComplex sum(prec_bits);
      Real scale = Real::from_si(1, prec_bits);
      for (std::size_t j = 0; j < pw.size(); ++j) {
        sum = sum + pw[j];
        scale = scale + abs(pw[j]);
        pw[j] = pw[j] * pts.u[j];
      }
      BigComplex exact =
          BigComplex::from_gauss(ps.s[static_cast<std::size_t>(m)], prec_bits);
      if (cmp(abs(sum - exact), scale * tol) > 0) {
        throw BuildFailure("power sum s_" + std::to_string(m) +
                           " disagrees with the numeric sum");
      }
    }
  }

  PrecompBundle bundle;
  bundle.params = params;
  bundle.G = std::move(G);
  bundle.J = std::move(J);
  bundle.power_sums = std::move(ps.s);
  bundle.provenance = {
      "prec " + std::to_string(prec_bits),
      "round_residual_exp " + std::to_string(exp_of(maxres)),
      "gates horner conj separable j_square newton_numeric ok",
  };
  return bundle;
}

PrecompBundle build_bundle(const CurveParams& params, int threads) {
  long start = 256 + 16 * params.d;
  std::string last;
  for (long prec = start; prec <= kRampCapBits; prec *= 2) {
    try {
      return build_bundle_at(params, prec, threads);
    } catch (const BuildFailure& e) {
      last = e.what();
    }
  }
  throw verify_error("precision ramp exhausted at 2^20 bits for D=" +
                     std::to_string(params.D) + " (last failure: " + last + ")");
}

void verify_bundle(const PrecompBundle& bundle) {
  CurveParams expect = (bundle.params.D == 1) ? eprime_params()
                                              : make_params(bundle.params.D);
  const CurveParams& got = bundle.params;
  if (!(expect.D == got.D && expect.Delta == got.Delta &&
        expect.f_gen == got.f_gen && expect.alpha == got.alpha &&
        expect.f_alpha == got.f_alpha && expect.d == got.d && expect.w == got.w)) {
    throw verify_error("bundle parameters do not match make_params(D)");
  }
  const long d = got.d;
  if (!bundle.G.is_monic_integral() || bundle.G.degree() != d) {
    throw verify_error("bundle G is not monic integral of degree d");
  }
  try {
    check_conj_closure(bundle.G, got);
  } catch (const BuildFailure& e) {
    throw verify_error(e.what());
  }
  if (static_cast<long>(bundle.power_sums.size()) != d) {
    throw verify_error("bundle power sum count != d");
  }
  PowerSums ps = newton_power_sums(bundle.G, d);
  if (ps.s != bundle.power_sums) {
    throw verify_error("bundle power sums fail Newton's identities");
  }
  if (bundle.J.is_zero() || bundle.J.degree() >= d) {
    throw verify_error("bundle J has unexpected degree");
  }
  {
    // Denominator must be supported on the primes of N(f).
    mpz_class nf = norm(got.f_gen);
    mpz_class tmp = bundle.J.denom, g, q;
    for (;;) {
      mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), nf.get_mpz_t());
      if (g <= 1) break;
      mpz_divexact(q.get_mpz_t(), tmp.get_mpz_t(), g.get_mpz_t());
      tmp = q;
    }
    if (tmp != 1) {
      throw verify_error("bundle J denominator is not supported on N(f)");
    }
  }
  {
    ZiPoly Jn(bundle.J.coeffs, mpz_class(1));
    ZiPoly gate = polmod(Jn * Jn - j_square_rhs(got.D, bundle.J.denom), bundle.G);
    if (!gate.is_zero()) {
      throw verify_error("bundle fails the exact gate J^2 = 4X^3 - 4DX (mod G)");
    }
  }
}

// ---------------------------------------------------------------------------
// Text serialization: integer-only bundle format.
// ---------------------------------------------------------------------------

namespace {
constexpr const char* kBundleVersion = "cmlv-bundle v1";
}

void save_bundle(const PrecompBundle& bundle, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw input_error(errc::file_not_found, "cannot open for writing: " + path);
  }
  out << kBundleVersion << "\n";
  out << "D " << bundle.params.D << "\n";
  out << "f_gen " << bundle.params.f_gen.re << " " << bundle.params.f_gen.im << "\n";
  out << "alpha " << bundle.params.alpha.re << " " << bundle.params.alpha.im << "\n";
  out << "d " << bundle.params.d << "\n";
  for (long i = 0; i <= bundle.G.degree(); ++i) {
    const GaussInt& c = bundle.G.coeff(static_cast<std::size_t>(i));
    out << "G " << i << " " << c.re << " " << c.im << "\n";
  }
  for (long i = 0; i <= bundle.J.degree(); ++i) {
    const GaussInt& c = bundle.J.coeff(static_cast<std::size_t>(i));
    out << "J " << i << " " << c.re << " " << c.im << "\n";
  }
  out << "denom " << bundle.J.denom << "\n";
  for (std::size_t m = 0; m < bundle.power_sums.size(); ++m) {
    out << "s " << m << " " << bundle.power_sums[m].re << " "
        << bundle.power_sums[m].im << "\n";
  }
  for (const std::string& line : bundle.provenance) out << "prov " << line << "\n";
  out.flush();
  if (!out) throw input_error(errc::bad_format, "short write: " + path);
}

PrecompBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw input_error(errc::file_not_found, "no such bundle file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw input_error(errc::bad_format, "empty bundle file: " + path);
  }
  if (line != kBundleVersion) {
    if (line.rfind("cmlv-bundle", 0) == 0) {
      throw input_error(errc::version_mismatch,
                        "unsupported bundle version: '" + line + "'");
    }
    throw input_error(errc::bad_format, "not a bundle file: " + path);
  }

  bool have_d_param = false, have_fgen = false, have_alpha = false,
       have_deg = false, have_denom = false;
  long long D = 0;
  GaussInt f_gen, alpha;
  long d = -1;
  mpz_class denom = 1;
  std::vector<std::pair<long, GaussInt>> gcs, jcs, sums;
  std::vector<std::string> prov;

  auto parse_z = [&](const std::string& tok) -> mpz_class {
    try {
      return mpz_class(tok);
    } catch (const std::invalid_argument&) {
      throw input_error(errc::bad_format, "bad integer '" + tok + "' in " + path);
    }
  };

  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    auto want = [&](int n) {
      std::vector<std::string> toks(static_cast<std::size_t>(n));
      for (auto& t : toks) {
        if (!(ss >> t)) {
          throw input_error(errc::bad_format,
                            "truncated line " + std::to_string(lineno) + " in " + path);
        }
      }
      std::string extra;
      if (ss >> extra) {
        throw input_error(errc::bad_format,
                          "trailing junk on line " + std::to_string(lineno));
      }
      return toks;
    };
    if (key == "D") {
      auto t = want(1);
      D = static_cast<long long>(parse_z(t[0]).get_si());
      have_d_param = true;
    } else if (key == "f_gen") {
      auto t = want(2);
      f_gen = GaussInt(parse_z(t[0]), parse_z(t[1]));
      have_fgen = true;
    } else if (key == "alpha") {
      auto t = want(2);
      alpha = GaussInt(parse_z(t[0]), parse_z(t[1]));
      have_alpha = true;
    } else if (key == "d") {
      auto t = want(1);
      d = static_cast<long>(parse_z(t[0]).get_si());
      have_deg = true;
    } else if (key == "G" || key == "J" || key == "s") {
      auto t = want(3);
      long idx = static_cast<long>(parse_z(t[0]).get_si());
      if (idx < 0) throw input_error(errc::bad_format, "negative index in " + path);
      GaussInt c(parse_z(t[1]), parse_z(t[2]));
      (key == "G" ? gcs : key == "J" ? jcs : sums).emplace_back(idx, std::move(c));
    } else if (key == "denom") {
      auto t = want(1);
      denom = parse_z(t[0]);
      have_denom = true;
    } else if (key == "prov") {
      std::string rest;
      std::getline(ss, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
      prov.push_back(rest);
    } else {
      throw input_error(errc::bad_format, "unknown keyword '" + key +
                                              "' on line " + std::to_string(lineno));
    }
  }
  if (!(have_d_param && have_fgen && have_alpha && have_deg && have_denom) ||
      gcs.empty() || jcs.empty() || sums.empty() || d <= 0) {
    throw input_error(errc::bad_format, "incomplete bundle file: " + path);
  }

  auto assemble = [&](const std::vector<std::pair<long, GaussInt>>& src, long size,
                      const char* what) {
    std::vector<GaussInt> v(static_cast<std::size_t>(size));
    for (const auto& [idx, c] : src) {
      if (idx >= size) {
        throw input_error(errc::bad_format,
                          std::string(what) + " index out of range in " + path);
      }
      v[static_cast<std::size_t>(idx)] = c;
    }
    return v;
  };

  PrecompBundle bundle;
  bundle.params = (D == 1) ? eprime_params() : make_params(D);
  if (!(bundle.params.f_gen == f_gen) || !(bundle.params.alpha == alpha) ||
      bundle.params.d != d) {
    throw verify_error("bundle header disagrees with parameters derived from D");
  }
  bundle.G = ZiPoly(assemble(gcs, d + 1, "G"));
  long maxj = 0;
  for (auto& [idx, c] : jcs) maxj = std::max(maxj, idx);
  if (maxj >= d) throw input_error(errc::bad_format, "J degree >= d in " + path);
  bundle.J = ZiPoly(assemble(jcs, maxj + 1, "J"), denom);
  bundle.power_sums = assemble(sums, d, "s");
  bundle.provenance = std::move(prov);
  verify_bundle(bundle);
  return bundle;
}

}  // namespace cmlv
