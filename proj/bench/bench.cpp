// Benchmark: serial reference loops vs the OpenMP kernels.
//
//   usage: cmlv_bench [D] [prec_bits] [pmax]
//          (defaults: D = 17, prec_bits = 2048, pmax = 600)
//
// Two kernels are compared, each against its serial reference:
//   * conjugate_points -- the d lattice-point evaluations of wp, wp'
//   * scan             -- per-prime modular c_p^+ over a range
// Both must produce results identical to the serial path; the benchmark
// fails (exit 1) if they do not.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "cmlv/algprecomp.hpp"
#include "cmlv/padicscan.hpp"

using namespace cmlv;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

PrecompBundle get_bundle(long long D) {
  std::string cache = "cmlv-cache";
  if (const char* env = std::getenv("CMLV_CACHE"); env != nullptr && *env != '\0') {
    cache = env;
  }
  std::filesystem::create_directories(cache);
  std::string path = cache + "/bundle-D" + std::to_string(D) + ".txt";
  if (std::filesystem::exists(path)) return load_bundle(path);
  PrecompBundle b = build_bundle(make_params(D));
  save_bundle(b, path);
  return b;
}

bool identical(const ConjugatePoints& a, const ConjugatePoints& b) {
  if (a.u.size() != b.u.size() || a.wpp.size() != b.wpp.size()) return false;
  for (std::size_t j = 0; j < a.u.size(); ++j) {
    if (!mpfr_equal_p(a.u[j].re.raw(), b.u[j].re.raw()) ||
        !mpfr_equal_p(a.u[j].im.raw(), b.u[j].im.raw()) ||
        !mpfr_equal_p(a.wpp[j].re.raw(), b.wpp[j].re.raw()) ||
        !mpfr_equal_p(a.wpp[j].im.raw(), b.wpp[j].im.raw())) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  long long D = argc > 1 ? std::atoll(argv[1]) : 17;
  long prec = argc > 2 ? std::atol(argv[2]) : 2048;
  long long pmax = argc > 3 ? std::atoll(argv[3]) : 600;

#ifdef _OPENMP
  int max_threads = omp_get_max_threads();
  std::printf("OpenMP enabled, max threads = %d\n", max_threads);
#else
  int max_threads = 1;
  std::printf("OpenMP not enabled; both paths run serially\n");
#endif

  CurveParams params = make_params(D);
  std::printf("curve D = %lld, degree d = %ld\n", params.D, params.d);

  // Kernel 1: conjugate point evaluation.
  std::printf("\nconjugate_points at %ld bits:\n", prec);
  double t0 = now_seconds();
  ConjugatePoints serial = conjugate_points(params, prec, 1);
  double t_serial = now_seconds() - t0;
  t0 = now_seconds();
  ConjugatePoints parallel = conjugate_points(params, prec, 0);
  double t_parallel = now_seconds() - t0;
  bool same_points = identical(serial, parallel);
  std::printf("  serial    %8.3fs\n", t_serial);
  std::printf("  parallel  %8.3fs  (x%.2f, %d threads)\n", t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0, max_threads);
  std::printf("  results bitwise identical: %s\n", same_points ? "yes" : "NO");

  // Kernel 2: the prime scan.
  PrecompBundle bundle = get_bundle(D);
  std::printf("\nscan p in [5, %lld] at k = 5:\n", pmax);
  t0 = now_seconds();
  ScanResult s1 = scan(bundle, 5, pmax, 5, {}, 1);
  double t_scan_serial = now_seconds() - t0;
  t0 = now_seconds();
  ScanResult s2 = scan(bundle, 5, pmax, 5, {}, 0);
  double t_scan_parallel = now_seconds() - t0;
  bool same_scan = format_csv(s1) == format_csv(s2);
  std::printf("  serial    %8.3fs  (%zu rows)\n", t_scan_serial, s1.rows.size());
  std::printf("  parallel  %8.3fs  (x%.2f, %d threads)\n", t_scan_parallel,
              t_scan_parallel > 0 ? t_scan_serial / t_scan_parallel : 0.0,
              max_threads);
  std::printf("  results identical: %s\n", same_scan ? "yes" : "NO");

  if (!same_points || !same_scan) {
    std::printf("\nbenchmark FAILED: parallel results differ from serial\n");
    return 1;
  }
  std::printf("\nbenchmark ok\n");
  return 0;
}
