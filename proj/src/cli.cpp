#include "cmlv/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmlv/algprecomp.hpp"
#include "cmlv/errors.hpp"
#include "cmlv/intarith.hpp"
#include "cmlv/numoracle.hpp"
#include "cmlv/padicscan.hpp"
#include "cmlv/traceexact.hpp"

namespace cmlv {

namespace {

std::string resolve_cache(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CMLV_CACHE"); env != nullptr && *env != '\0') {
    return env;
  }
  return "cmlv-cache";
}

std::string bundle_path(const std::string& cache, long long D) {
  return cache + "/bundle-D" + std::to_string(D) + ".txt";
}

PrecompBundle load_cached(const std::string& cache, long long D) {
  // Derive the parameters first so a bad D fails as an input error with the
  // right message even when no cache exists yet.
  CurveParams params = (D == 1) ? eprime_params() : make_params(D);
  std::string path = bundle_path(cache, params.D);
  if (!std::filesystem::exists(path)) {
    throw input_error(errc::file_not_found,
                      "no bundle for D=" + std::to_string(D) + " at " + path +
                          "; run: cmlv precompute --d-param " + std::to_string(D));
  }
  return load_bundle(path);
}

bool row_is_anomalous(const CpResult& r, int rank) {
  return r.ord_saturated || r.ord < rank;
}

int run_precompute(long long D, const std::string& cache_flag, int threads) {
  std::string cache = resolve_cache(cache_flag);
  std::filesystem::create_directories(cache);
  CurveParams params = (D == 1) ? eprime_params() : make_params(D);
  std::string path = bundle_path(cache, params.D);
  if (std::filesystem::exists(path)) {
    PrecompBundle b = load_bundle(path);  // re-verifies every gate
    std::cout << "bundle already present and verified: " << path
              << " (D=" << b.params.D << ", d=" << b.params.d << ")\n";
    return 0;
  }
  PrecompBundle b = build_bundle(params, threads);
  save_bundle(b, path);
  std::cout << "bundle written: " << path << "\n";
  std::cout << "D = " << b.params.D << ", degree d = " << b.params.d
            << ", J denominator = " << b.J.denom.get_str() << "\n";
  for (const std::string& line : b.provenance) std::cout << "  " << line << "\n";
  return 0;
}

int run_cp(long long D, long long p, long k, const CpOptions& opt,
           const std::string& format, const std::string& cache_flag) {
  PrecompBundle b = load_cached(resolve_cache(cache_flag), D);
  ScanResult sr;
  sr.D = b.params.D;
  sr.k = (k == -1) ? opt.rank + 3 : k;
  sr.rank = opt.rank;
  ScanRow row;
  row.p = p;
  row.res = cp_plus_mod(b, p, k, opt);

  // Within the exact range, recompute rationally and require agreement.
  if (p <= opt.exact_pmax) {
    ExactCp e = cp_plus_exact(b, p, opt);
    if (!row.res.ord_saturated &&
        (e.res.ord != row.res.ord || e.res.unit_digit != row.res.unit_digit)) {
      throw verify_error("exact and modular paths disagree at p=" +
                         std::to_string(p));
    }
  }
  sr.rows.push_back(row);
  std::cout << (format == "csv" ? format_csv(sr) : format_table(sr));
  return row_is_anomalous(row.res, opt.rank) ? 4 : 0;
}

int run_scan(long long D, long long pmin, long long pmax, long k,
             const CpOptions& opt, const std::string& format,
             const std::string& cache_flag, int threads) {
  PrecompBundle b = load_cached(resolve_cache(cache_flag), D);
  ScanResult sr = scan(b, pmin, pmax, k, opt, threads);
  std::cout << (format == "csv" ? format_csv(sr) : format_table(sr));
  return sr.any_anomaly() ? 4 : 0;
}

int run_verdict(long long D, long long p, long k, const CpOptions& opt,
                const std::string& cache_flag) {
  PrecompBundle b = load_cached(resolve_cache(cache_flag), D);
  CpResult r = cp_plus_mod(b, p, k, opt);
  std::cout << "D = " << b.params.D << ", p = " << p << ", k = " << r.k << "\n";
  if (r.ord_saturated) {
    std::cout << "ord >= " << r.k << " (saturated: raise k for more)\n";
  } else {
    std::cout << "ord = " << r.ord;
    if (r.unit_defined) std::cout << ", unit digit = " << r.unit_digit;
    std::cout << (r.exceptional ? ", exceptional (ord > rank)" : "") << "\n";
  }
  if (!r.m_p_bound_note.empty()) {
    std::cout << r.m_p_bound_note << " (parity hypothesis, rank = " << opt.rank
              << ")\n";
  }
  std::cout << "verdict: " << to_string(r.verdict) << "\n";
  return row_is_anomalous(r, opt.rank) ? 4 : 0;
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

struct SelftestState {
  int failures = 0;

  void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }

  template <class F>
  void check(const std::string& name, F&& f) {
    try {
      bool ok = f();
      report(name, ok);
    } catch (const std::exception& e) {
      report(name, false, e.what());
    }
  }
};

bool selftest_b13_fixtures() {
  // Printed B_13 coefficient lists, times the common factor
  // 7496723869173 * 2^24.
  const mpz_class unit = mpz_class("7496723869173") << 24;
  struct Fixture {
    long long D;
    const char* c[7];  // exponents 1, 3, 5, 7, 9, 11, 13
  };
  const Fixture fixtures[] = {
      {17,
       {"1383348216959", "-10236515835780", "12057373443375", "-4592819790000",
        "723915196875", "-49451512500", "1212046875"}},
      {-14,
       {"431525237696", "3877463640960", "5545863414000", "2565173520000",
        "490959787500", "40724775000", "1212046875"}},
  };
  for (const Fixture& fx : fixtures) {
    BnPoly b = bn_poly_exact(fx.D, 13);
    if (b.coeffs.size() != 14) return false;
    for (int j = 0; j < 14; ++j) {
      mpz_class want = 0;
      if (j % 2 == 1) want = mpz_class(fx.c[(j - 1) / 2]) * unit;
      if (b.coeffs[static_cast<std::size_t>(j)] != want) return false;
    }
  }
  return true;
}

bool selftest_bn_routes() {
  for (long long D : {17LL, -14LL, 3LL, 5LL}) {
    for (long n = 0; n <= 13; ++n) {
      BnPoly a = bn_poly_exact(D, n);
      BnPoly b = bn_poly_via_diffop(D, n);
      if (a.coeffs != b.coeffs) return false;
    }
  }
  return true;
}

bool selftest_psi_point_counts() {
  for (long long D : {3LL, 5LL, 17LL, -14LL}) {
    CurveParams params = make_params(D);
    for (long long p = 5; p < 200; p += 4) {
      if (!is_prime_u64(static_cast<unsigned long long>(p))) continue;
      if ((2 * D) % p == 0) continue;
      auto factors = factor(GaussInt(mpz_class(static_cast<long>(p)), 0));
      if (factors.size() != 2) return false;
      GaussInt tr = psi(params, IdealRep(factors[0].first)) +
                    psi(params, IdealRep(factors[1].first));
      if (tr.im != 0) return false;
      if (tr.re != mpz_class(static_cast<long>(ap_point_count(D, p)))) return false;
    }
  }
  return true;
}

bool selftest_newton_vs_roots() {
  std::vector<GaussInt> roots = {GaussInt(1, 1),  GaussInt(2, -1), GaussInt(0, 3),
                                 GaussInt(-1, 2), GaussInt(3, 0),  GaussInt(-2, -2)};
  ZiPoly g(std::vector<GaussInt>{GaussInt(1, 0)});
  for (const GaussInt& r : roots) {
    g = g * ZiPoly(std::vector<GaussInt>{-r, GaussInt(1, 0)});
  }
  PowerSums ps = newton_power_sums(g, 10);
  for (long m = 0; m < 10; ++m) {
    GaussInt direct(0, 0);
    for (const GaussInt& r : roots) {
      direct = direct + gpow(r, static_cast<unsigned long>(m));
    }
    if (!(ps.s[static_cast<std::size_t>(m)] == direct)) return false;
  }
  return true;
}

int run_selftest(const std::string& cache_flag, int threads) {
  SelftestState st;
  st.check("bn-recurrence-vs-diffop", selftest_bn_routes);
  st.check("b13-printed-coefficients", selftest_b13_fixtures);
  st.check("psi-matches-point-counts", selftest_psi_point_counts);
  st.check("newton-vs-roots", selftest_newton_vs_roots);

  PrecompBundle b3, b5;
  bool have3 = false, have5 = false;
  st.check("bundle-gates-d3", [&] {
    b3 = build_bundle(make_params(3), threads);
    verify_bundle(b3);
    have3 = true;
    return b3.params.d == 16;
  });
  st.check("bundle-gates-d5", [&] {
    b5 = build_bundle(make_params(5), threads);
    verify_bundle(b5);
    have5 = true;
    return b5.params.d == 16;
  });

  st.check("numeric-oracle-d3-p13", [&] {
    if (!have3) return false;
    OracleReport rep = xi_oracle(b3, 13, 1024);
    return rep.matched && rep.nonzero;
  });

  st.check("exact-vs-modular", [&] {
    if (!have3 || !have5) return false;
    struct Case {
      const PrecompBundle* b;
      std::vector<long long> ps;
    };
    for (const Case& c : {Case{&b3, {5, 13, 17, 29, 37, 41}}, Case{&b5, {13, 17}}}) {
      for (long long p : c.ps) {
        ExactCp e = cp_plus_exact(*c.b, p);
        mpz_class residue;
        CpResult m = cp_plus_mod(*c.b, p, 5, {}, &residue);
        mpz_class pk, dinv;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), 5);
        if (mpz_invert(dinv.get_mpz_t(), e.value.get_den().get_mpz_t(),
                       pk.get_mpz_t()) == 0) {
          return false;
        }
        mpz_class want = (e.value.get_num() * dinv) % pk;
        if (want < 0) want += pk;
        if (residue != want) return false;
        if (m.ord != e.res.ord || m.unit_digit != e.res.unit_digit) return false;
      }
    }
    return true;
  });

  st.check("save-load-roundtrip", [&] {
    if (!have3) return false;
    std::string cache = resolve_cache(cache_flag);
    std::filesystem::create_directories(cache);
    std::string path = cache + "/selftest-roundtrip.txt";
    save_bundle(b3, path);
    PrecompBundle loaded = load_bundle(path);
    std::filesystem::remove(path);
    return loaded == b3;
  });

  std::cout << (st.failures == 0 ? "selftest: all checks passed\n"
                                 : "selftest: FAILURES\n");
  return st.failures == 0 ? 0 : 3;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"cmlv: normalized Hecke L-values c_p^+ of y^2 = x^3 - D x"};
  app.require_subcommand(1);

  long long D = 0, p = 0, pmin = 0, pmax = 0;
  long k = -1;
  int rank = 2, threads = 0;
  bool parity_ok = true;
  std::string format = "table", cache;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--k", k, "p-adic precision (default: rank + 3)");
    cmd->add_option("--rank", rank, "rank hypothesis s_p (default 2)")
        ->check(CLI::Range(0, 64));
    cmd->add_flag("--parity-ok,!--no-parity-ok", parity_ok,
                  "assume the parity hypothesis rank = s_p (mod 2)");
    if (with_format) {
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"table", "csv"}));
    }
    cmd->add_option("--cache", cache, "bundle cache directory (or $CMLV_CACHE)");
  };

  CLI::App* pre = app.add_subcommand("precompute",
                                     "build and cache the algebraic bundle for D");
  pre->add_option("--d-param", D, "the parameter D of y^2 = x^3 - D x")->required();
  pre->add_option("--cache", cache, "bundle cache directory (or $CMLV_CACHE)");
  pre->add_option("--threads", threads, "OpenMP threads (0 = default, 1 = serial)");

  CLI::App* cp = app.add_subcommand("cp", "c_p^+ at a single prime");
  cp->add_option("--d-param", D, "curve parameter")->required();
  cp->add_option("--p", p, "prime p = 1 (mod 4)")->required();
  add_common(cp, true);

  CLI::App* sc = app.add_subcommand("scan", "scan primes p = 1 (mod 4) in a range");
  sc->add_option("--d-param", D, "curve parameter")->required();
  sc->add_option("--pmin", pmin, "lower end (inclusive)")->required();
  sc->add_option("--pmax", pmax, "upper end (inclusive)")->required();
  sc->add_option("--threads", threads, "OpenMP threads (0 = default, 1 = serial)");
  add_common(sc, true);

  CLI::App* vd = app.add_subcommand("verdict", "Sha finiteness verdict at one prime");
  vd->add_option("--d-param", D, "curve parameter")->required();
  vd->add_option("--p", p, "prime p = 1 (mod 4)")->required();
  add_common(vd, false);

  CLI::App* stc = app.add_subcommand("selftest", "run the built-in consistency matrix");
  stc->add_option("--cache", cache, "bundle cache directory (or $CMLV_CACHE)");
  stc->add_option("--threads", threads, "OpenMP threads (0 = default, 1 = serial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CpOptions opt;
  opt.rank = rank;
  opt.parity_ok = parity_ok;

  try {
    if (pre->parsed()) return run_precompute(D, cache, threads);
    if (cp->parsed()) return run_cp(D, p, k, opt, format, cache);
    if (sc->parsed()) return run_scan(D, pmin, pmax, k, opt, format, cache, threads);
    if (vd->parsed()) return run_verdict(D, p, k, opt, cache);
    if (stc->parsed()) return run_selftest(cache, threads);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const verify_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace cmlv
