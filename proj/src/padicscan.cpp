#include "cmlv/padicscan.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "cmlv/errors.hpp"
#include "cmlv/intarith.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmlv {

namespace {

// ---------------------------------------------------------------------------
// Coefficient rings Z/p^k.
// ---------------------------------------------------------------------------

struct Ring64 {
  using elem = std::uint64_t;
  std::uint64_t mod;
  mpz_class mod_z;

  explicit Ring64(const mpz_class& m) : mod(m.get_ui()), mod_z(m) {}

  elem zero() const { return 0; }
  elem from_mpz(const mpz_class& z) const {
    mpz_class t;
    mpz_fdiv_r(t.get_mpz_t(), z.get_mpz_t(), mod_z.get_mpz_t());
    return t.get_ui();
  }
  elem from_si(long long v) const {
    if (v >= 0) return static_cast<std::uint64_t>(v) % mod;
    std::uint64_t a = static_cast<std::uint64_t>(-v) % mod;
    return a == 0 ? 0 : mod - a;
  }
  mpz_class to_mpz(elem a) const { return mpz_class(static_cast<unsigned long>(a)); }
  elem add(elem a, elem b) const {
    elem s = a + b;
    return s >= mod ? s - mod : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + mod - b; }
  elem mul(elem a, elem b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % mod);
  }
};

struct RingMpz {
  using elem = mpz_class;
  mpz_class mod;

  explicit RingMpz(const mpz_class& m) : mod(m) {}

  elem zero() const { return mpz_class(0); }
  elem from_mpz(const mpz_class& z) const {
    mpz_class t;
    mpz_fdiv_r(t.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
    return t;
  }
  elem from_si(long long v) const { return from_mpz(mpz_class(static_cast<long>(v))); }
  mpz_class to_mpz(const elem& a) const { return a; }
  elem add(const elem& a, const elem& b) const {
    mpz_class s = a + b;
    if (s >= mod) s -= mod;
    return s;
  }
  elem sub(const elem& a, const elem& b) const {
    mpz_class s = a - b;
    if (s < 0) s += mod;
    return s;
  }
  elem mul(const elem& a, const elem& b) const {
    mpz_class t = a * b;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t());
    return t;
  }
};

// ---------------------------------------------------------------------------
// Kernel, templated on the ring.
// ---------------------------------------------------------------------------

// B_n mod p^k by the integer two-term recurrence (embedding-independent).
template <class R>
std::vector<typename R::elem> bn_mod(const R& ring, long long D, long n) {
  using E = typename R::elem;
  const E twoD = ring.from_si(2 * D);
  std::vector<E> b{ring.from_si(1)};
  for (long cur = 0; cur < n; ++cur) {
    std::vector<E> next(static_cast<std::size_t>(cur + 2), ring.zero());
    for (long m = 0; m <= cur + 1; ++m) {
      E acc = ring.zero();
      if (m - 1 >= 0 && m - 1 <= cur) {
        acc = ring.mul(b[static_cast<std::size_t>(m - 1)],
                       ring.from_si((m + 1) * (4 * m + 2)));
      }
      if (m + 1 <= cur) {
        E t = ring.mul(b[static_cast<std::size_t>(m + 1)],
                       ring.from_si((m + 1) * (2 * m + 3)));
        acc = ring.sub(acc, ring.mul(twoD, t));
      }
      next[static_cast<std::size_t>(m)] = acc;
    }
    b = std::move(next);
  }
  return b;
}

// One embedding tail: fold B mod G, multiply by J, trace against the power
// sums, divide by the normalizer.  Returns the residue of c_p^+ in [0, p^k).
template <class R>
mpz_class c_residue_tail(const R& ring, const PrecompBundle& bundle,
                         const ModCtx& ctx, const mpz_class& r,
                         const std::vector<typename R::elem>& b) {
  using E = typename R::elem;
  const long d = bundle.params.d;
  const std::size_t du = static_cast<std::size_t>(d);

  auto embed_vec = [&](const std::vector<GaussInt>& src, std::size_t size) {
    std::vector<E> v(size, ring.zero());
    for (std::size_t i = 0; i < src.size(); ++i) {
      v[i] = ring.from_mpz(embed_gauss(src[i], r, ctx.modulus));
    }
    return v;
  };

  std::vector<E> g = embed_vec(bundle.G.coeffs, du + 1);

  // rem = B mod G, Horner-style from the top coefficient.
  std::vector<E> rem(du, ring.zero());
  for (std::size_t m = b.size(); m-- > 0;) {
    // rem <- rem * X mod G
    E top = rem[du - 1];
    for (std::size_t j = du - 1; j > 0; --j) rem[j] = rem[j - 1];
    rem[0] = ring.zero();
    if (!(top == ring.zero())) {
      for (std::size_t j = 0; j < du; ++j) {
        rem[j] = ring.sub(rem[j], ring.mul(top, g[j]));
      }
    }
    rem[0] = ring.add(rem[0], b[m]);
  }

  // a = rem * J mod G.
  std::vector<E> jr = embed_vec(bundle.J.coeffs, bundle.J.coeffs.size());
  std::vector<E> prod(du + jr.size() - 1, ring.zero());
  for (std::size_t i = 0; i < du; ++i) {
    if (rem[i] == ring.zero()) continue;
    for (std::size_t j = 0; j < jr.size(); ++j) {
      prod[i + j] = ring.add(prod[i + j], ring.mul(rem[i], jr[j]));
    }
  }
  for (std::size_t idx = prod.size(); idx-- > du;) {
    E top = prod[idx];
    if (top == ring.zero()) continue;
    for (std::size_t j = 0; j < du; ++j) {
      prod[idx - du + j] = ring.sub(prod[idx - du + j], ring.mul(top, g[j]));
    }
    prod[idx] = ring.zero();
  }

  // xi = sum_m a[m] s_m (times 1/J.denom, folded into the normalizer below).
  std::vector<E> sr = embed_vec(bundle.power_sums, du);
  E xi = ring.zero();
  for (std::size_t m = 0; m < du; ++m) xi = ring.add(xi, ring.mul(prod[m], sr[m]));

  // W = 4 (p-1)! (f alpha)^p J.denom ;  c = -sign(D) xi / W.
  E w = ring.from_si(4);
  for (long long i = 2; i < ctx.p; ++i) w = ring.mul(w, ring.from_si(i));
  E fa = ring.from_mpz(embed_gauss(bundle.params.f_alpha, r, ctx.modulus));
  E fap = ring.from_si(1);
  {
    unsigned long long e = static_cast<unsigned long long>(ctx.p);
    E base = fa;
    while (e != 0) {
      if (e & 1ULL) fap = ring.mul(fap, base);
      base = ring.mul(base, base);
      e >>= 1;
    }
  }
  w = ring.mul(w, fap);
  w = ring.mul(w, ring.from_mpz(bundle.J.denom));

  mpz_class winv;
  if (mpz_invert(winv.get_mpz_t(), ring.to_mpz(w).get_mpz_t(),
                 ctx.modulus.get_mpz_t()) == 0) {
    throw verify_error("normalizer is not invertible mod p^k at p=" +
                       std::to_string(ctx.p));
  }
  E c = ring.mul(xi, ring.from_mpz(winv));
  if (bundle.params.D > 0) c = ring.sub(ring.zero(), c);
  return ring.to_mpz(c);
}

template <class R>
mpz_class c_residue_both(const PrecompBundle& bundle, const ModCtx& ctx) {
  R ring(ctx.modulus);
  const long n = static_cast<long>((ctx.p - 3) / 2);
  std::vector<typename R::elem> b = bn_mod(ring, bundle.params.D, n);
  mpz_class r2 = ctx.modulus - ctx.r;
  mpz_class c1 = c_residue_tail(ring, bundle, ctx, ctx.r, b);
  mpz_class c2 = c_residue_tail(ring, bundle, ctx, r2, b);
  if (c1 != c2) {
    throw verify_error("the two embeddings disagree on c_p^+ mod p^k at p=" +
                       std::to_string(ctx.p));
  }
  return c1;
}

void check_prime_for_curve_mod(const CurveParams& params, long long p) {
  if (p < 5 || !is_prime_u64(static_cast<unsigned long long>(p)) || p % 4 != 1) {
    throw input_error(errc::bad_prime,
                      "p must be a prime = 1 (mod 4), p >= 5; got " +
                          std::to_string(p));
  }
  mpz_class nfa = norm(params.f_alpha);
  if (mpz_divisible_ui_p(nfa.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    throw input_error(errc::bad_prime,
                      "p = " + std::to_string(p) + " divides 2D (bad reduction)");
  }
}

CpResult fill_from_residue(const mpz_class& c, long long p, long k,
                           const CpOptions& opt, bool good_ordinary) {
  CpResult res;
  res.p = p;
  res.k = k;
  if (c == 0) {
    res.ord = k;
    res.ord_saturated = true;
    res.unit_defined = false;
    res.unit_digit = 0;
    if (k > opt.rank) {
      res.table_defined = true;
      res.table_digit = 0;
      res.exceptional = true;
    } else {
      res.table_defined = false;
      res.table_digit = 0;
      res.exceptional = false;
    }
  } else {
    mpz_class u, pz(static_cast<long>(p));
    res.ord = static_cast<long>(
        mpz_remove(u.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t()));
    res.ord_saturated = false;
    res.unit_digit = static_cast<long long>(
        mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(p)));
    res.unit_defined = true;
    res.exceptional = res.ord > opt.rank;
    if (res.ord >= opt.rank) {
      res.table_defined = true;
      res.table_digit = (res.ord == opt.rank) ? res.unit_digit : 0;
    } else {
      res.table_defined = false;
      res.table_digit = 0;
    }
  }
  res.verdict = decide_verdict(res.ord, res.ord_saturated, opt.rank, opt.parity_ok,
                               good_ordinary);
  res.m_p_bound_note = m_p_bound_note_for(opt.rank, opt.parity_ok);
  return res;
}

}  // namespace

ModCtx make_ctx(const CurveParams& params, long long p, long k) {
  check_prime_for_curve_mod(params, p);
  if (k < 1) {
    throw input_error(errc::bad_argument, "k must be >= 1; got " + std::to_string(k));
  }
  ModCtx ctx;
  ctx.p = p;
  ctx.k = k;
  mpz_ui_pow_ui(ctx.modulus.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));

  unsigned long long r0 = sqrt_minus_one_u64(static_cast<unsigned long long>(p));
  unsigned long long other = static_cast<unsigned long long>(p) - r0;
  if (other < r0) r0 = other;  // deterministic: the smaller root mod p

  // Newton lift x <- x - (x^2 + 1) / (2x), doubling the modulus each step.
  mpz_class x(static_cast<unsigned long>(r0));
  mpz_class mod(static_cast<long>(p));
  while (mod < ctx.modulus) {
    mod = mod * mod;
    if (mod > ctx.modulus) mod = ctx.modulus;
    mpz_class fx = (x * x + 1) % mod;
    mpz_class inv2x;
    mpz_class two_x = (x * 2) % mod;
    if (mpz_invert(inv2x.get_mpz_t(), two_x.get_mpz_t(), mod.get_mpz_t()) == 0) {
      throw verify_error("Hensel lift failed: 2x not invertible");
    }
    x = (x - fx * inv2x) % mod;
    if (x < 0) x += mod;
  }
  if ((x * x + 1) % ctx.modulus != 0) {
    throw verify_error("Hensel lift failed: r^2 != -1 mod p^k");
  }
  ctx.r = x;
  return ctx;
}

mpz_class embed_gauss(const GaussInt& z, const mpz_class& r,
                      const mpz_class& modulus) {
  mpz_class v = (z.re + z.im * r) % modulus;
  if (v < 0) v += modulus;
  return v;
}

CpResult cp_plus_mod(const PrecompBundle& bundle, long long p, long k,
                     const CpOptions& opt, mpz_class* residue_out) {
  if (k == -1) k = opt.rank + 3;
  ModCtx ctx = make_ctx(bundle.params, p, k);
  mpz_class c;
  if (mpz_sizeinbase(ctx.modulus.get_mpz_t(), 2) <= 62) {
    c = c_residue_both<Ring64>(bundle, ctx);
  } else {
    c = c_residue_both<RingMpz>(bundle, ctx);
  }
  if (residue_out != nullptr) *residue_out = c;
  return fill_from_residue(c, p, k, opt, good_ordinary_ok(bundle.params.D, p));
}

bool ScanResult::any_anomaly() const {
  for (const ScanRow& row : rows) {
    if (row.skipped) continue;
    if (row.res.ord_saturated || row.res.ord < rank) return true;
  }
  return false;
}

ScanResult scan(const PrecompBundle& bundle, long long pmin, long long pmax,
                long k, const CpOptions& opt, int threads) {
  if (k == -1) k = opt.rank + 3;
  if (k < 1) {
    throw input_error(errc::bad_argument, "k must be >= 1; got " + std::to_string(k));
  }
  ScanResult out;
  out.D = bundle.params.D;
  out.k = k;
  out.rank = opt.rank;

  std::vector<long long> candidates;
  for (long long p = pmin < 5 ? 5 : pmin; p <= pmax; ++p) {
    if (p % 4 == 1 && is_prime_u64(static_cast<unsigned long long>(p))) {
      candidates.push_back(p);
    }
  }
  out.rows.resize(candidates.size());
  std::vector<std::string> errors(candidates.size());

  mpz_class nfa = norm(bundle.params.f_alpha);
  auto run_one = [&](std::size_t i) {
    long long p = candidates[i];
    ScanRow& row = out.rows[i];
    row.p = p;
    if (mpz_divisible_ui_p(nfa.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
      row.skipped = true;
      row.skip_reason = "divides 2D (bad reduction)";
      return;
    }
    try {
      row.res = cp_plus_mod(bundle, p, k, opt);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };

#ifdef _OPENMP
  if (threads != 1) {
    int nt = threads <= 0 ? omp_get_max_threads() : threads;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (std::size_t i = 0; i < candidates.size(); ++i) run_one(i);
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) run_one(i);
  }
#else
  (void)threads;
  for (std::size_t i = 0; i < candidates.size(); ++i) run_one(i);
#endif

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!errors[i].empty()) throw verify_error(errors[i]);
  }
  return out;
}

std::string format_table(const ScanResult& sr) {
  std::ostringstream os;
  os << "D = " << sr.D << ", k = " << sr.k << ", rank = " << sr.rank;
  std::string note = m_p_bound_note_for(sr.rank, true);
  bool parity = false;
  for (const ScanRow& row : sr.rows) {
    if (!row.skipped) {
      parity = !row.res.m_p_bound_note.empty();
      break;
    }
  }
  if (parity) os << "  (parity hypothesis: " << note << ")";
  os << "\n";
  os << "     p   ord  unit  table  exc  verdict\n";
  for (const ScanRow& row : sr.rows) {
    if (row.skipped) {
      os << "  skipped p = " << row.p << ": " << row.skip_reason << "\n";
      continue;
    }
    const CpResult& r = row.res;
    char buf[128];
    std::string ord = r.ord_saturated ? (">=" + std::to_string(r.k))
                                      : std::to_string(r.ord);
    std::string unit = r.unit_defined ? std::to_string(r.unit_digit) : "-";
    std::string table = r.table_defined ? std::to_string(r.table_digit) : "-";
    std::snprintf(buf, sizeof buf, "%6lld  %4s  %4s  %5s  %3s  %s\n",
                  row.p, ord.c_str(), unit.c_str(), table.c_str(),
                  r.exceptional ? "yes" : "no", to_string(r.verdict).c_str());
    os << buf;
  }
  return os.str();
}

std::string format_csv(const ScanResult& sr) {
  std::ostringstream os;
  os << "p, ord, unit_digit, table_digit, exceptional, verdict\n";
  for (const ScanRow& row : sr.rows) {
    if (row.skipped) continue;
    const CpResult& r = row.res;
    os << row.p << ", ";
    if (r.ord_saturated) {
      os << ">=" << r.k;
    } else {
      os << r.ord;
    }
    os << ", ";
    if (r.unit_defined) os << r.unit_digit;
    os << ", ";
    if (r.table_defined) os << r.table_digit;
    os << ", " << (r.exceptional ? 1 : 0) << ", " << to_string(r.verdict) << "\n";
  }
  return os.str();
}

}  // namespace cmlv
