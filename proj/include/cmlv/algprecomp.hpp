#pragma once

// Algebraic precomputation for a curve y^2 = x^3 - D x:
//   * the d conjugate values u_b = Omega_inf^-2 wp(psi(b)/f) over the ray
//     classes b of conductor f, together with Omega_inf^-3 wp'(psi(b)/f),
//   * their monic minimal-type polynomial G in Z[i][X] (degree d),
//   * the interpolation polynomial J with J(u_b) = Omega_inf^-3 wp'(...),
//   * the power sums s_0 .. s_{d-1} of the u_b,
// all produced with a doubling precision ramp and exact acceptance gates,
// and (de)serialized as an integer-only text bundle.

#include <string>
#include <vector>

#include "cmlv/curvefam.hpp"
#include "cmlv/mpcomplex.hpp"
#include "cmlv/zipoly.hpp"

namespace cmlv {

struct ConjugatePoints {
  std::vector<BigComplex> u;    // Omega_inf^-2 wp(psi(b)/f)
  std::vector<BigComplex> wpp;  // Omega_inf^-3 wp'(psi(b)/f)
};

// Evaluate the d conjugate points at the given precision.  threads == 1 runs
// the serial reference loop; threads <= 0 uses the OpenMP default; any other
// value requests that many OpenMP threads.  The result is bitwise identical
// for every thread count.
ConjugatePoints conjugate_points(const CurveParams& params, long prec_bits,
                                 int threads = 0);

struct PrecompBundle {
  CurveParams params;
  ZiPoly G;                         // monic, integral, degree d
  ZiPoly J;                         // degree < d, denominator | N(f)^t
  std::vector<GaussInt> power_sums; // s_0 .. s_{d-1}
  std::vector<std::string> provenance;
};

bool operator==(const PrecompBundle& a, const PrecompBundle& b);

// One build attempt at a fixed precision.  Throws verify_error when a
// tolerance or exact gate fails at this precision.
PrecompBundle build_bundle_at(const CurveParams& params, long prec_bits,
                              int threads = 0);

// Precision ramp: starts at 256 + 16 d bits and doubles on failure up to
// 2^20 bits.  Throws verify_error if the cap is exceeded.
PrecompBundle build_bundle(const CurveParams& params, int threads = 0);

// Exact consistency gates on a bundle (also run by load_bundle):
//   * parameters match make_params(D),
//   * G monic integral of degree d with the case-correct conjugation
//     symmetry and s_0 = d,
//   * J^2 = (4X^3 - 4DX) J_denom^2 (mod G) exactly over Z[i],
//   * power sums match Newton's identities applied to G.
// Throws verify_error on any failure.
void verify_bundle(const PrecompBundle& bundle);

// Integer-only text serialization.
void save_bundle(const PrecompBundle& bundle, const std::string& path);

// Parses and then re-verifies.  Throws input_error with errc::file_not_found,
// errc::bad_format, or errc::version_mismatch on bad files, and verify_error
// if the contents fail verify_bundle.
PrecompBundle load_bundle(const std::string& path);

}  // namespace cmlv
