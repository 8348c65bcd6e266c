#pragma once

// p-adic evaluation of c_p^+ modulo p^k through the two ring homomorphisms
// Z[i] -> Z/p^k (i -> r and i -> -r, r^2 = -1), prime scans over a range,
// and the table / CSV renderers.  Both embeddings are always computed and
// must agree (verify_error otherwise); the kernel runs on 64-bit words when
// p^k < 2^63 and on mpz limbs beyond, with identical results.

#include <string>
#include <vector>

#include "cmlv/algprecomp.hpp"
#include "cmlv/cpresult.hpp"
#include "cmlv/traceexact.hpp"

namespace cmlv {

struct ModCtx {
  long long p = 0;
  long k = 0;
  mpz_class modulus;  // p^k
  mpz_class r;        // sqrt(-1) mod p^k lifting the smaller root mod p
};

// Validates p (prime, = 1 mod 4, >= 5, coprime to 2D) and k >= 1
// (errc::bad_prime / errc::bad_argument), then Hensel-lifts the smaller
// square root of -1 mod p to p^k.
ModCtx make_ctx(const CurveParams& params, long long p, long k);

// The homomorphism Z[i] -> Z/modulus with i -> r; result in [0, modulus).
mpz_class embed_gauss(const GaussInt& z, const mpz_class& r,
                      const mpz_class& modulus);

// c_p^+ mod p^k.  k = -1 selects the default k = opt.rank + 3.  When
// residue_out is non-null it receives the residue of c_p^+ in [0, p^k).
CpResult cp_plus_mod(const PrecompBundle& bundle, long long p, long k,
                     const CpOptions& opt = {}, mpz_class* residue_out = nullptr);

struct ScanRow {
  long long p = 0;
  bool skipped = false;     // p | 2D: no computation, reason recorded
  std::string skip_reason;
  CpResult res;
};

struct ScanResult {
  long long D = 0;
  long k = 0;
  int rank = 2;
  std::vector<ScanRow> rows;

  // An anomaly is a computed row with ord < rank or with the order only
  // bounded below (saturated at k).
  bool any_anomaly() const;
};

// Every prime p = 1 (mod 4) in [pmin, pmax] (inclusive, from p >= 5) in
// increasing order; primes dividing 2D appear as skipped rows.  threads as
// in conjugate_points: 1 = serial reference, <= 0 = OpenMP default.  The
// result is identical for every thread count.
ScanResult scan(const PrecompBundle& bundle, long long pmin, long long pmax,
                long k, const CpOptions& opt = {}, int threads = 0);

// Human-readable table, including skipped rows.
std::string format_table(const ScanResult& sr);

// Machine-readable CSV with the fixed header
//   p, ord, unit_digit, table_digit, exceptional, verdict
// Saturated orders render as ">=k" with an empty unit digit; skipped rows
// are omitted.
std::string format_csv(const ScanResult& sr);

}  // namespace cmlv
