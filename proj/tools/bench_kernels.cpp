// Times the serial reference kernels against the OpenMP variants and checks
// that both produce bitwise identical results (the kernels fix the exact
// operation order, so any difference is a bug, not roundoff). Exits nonzero
// on a mismatch, which makes --quick usable as a smoke test.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "prodrep/cmatrix.hpp"
#include "prodrep/fixtures.hpp"
#include "prodrep/kernels.hpp"
#include "prodrep/rng.hpp"

namespace {

using prodrep::Rng;
using prodrep::algebra::Complex;
using prodrep::algebra::ComplexMatrix;
namespace kernels = prodrep::kernels;

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data().data(), b.data().data(),
                     a.data().size() * sizeof(Complex)) == 0;
}

struct Row {
  std::string op;
  std::size_t n;
  double serial_ms;
  double parallel_ms;
  bool match;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-14s %6s %12s %12s %9s %7s\n", "op", "n", "serial ms",
              "parallel ms", "speedup", "match");
  for (const Row& r : rows) {
    std::printf("%-14s %6zu %12.3f %12.3f %9.2f %7s\n", r.op.c_str(), r.n,
                r.serial_ms, r.parallel_ms,
                r.parallel_ms > 0.0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.match ? "yes" : "NO");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial versus OpenMP kernel comparison"};
  std::vector<std::size_t> sizes{64, 128, 256};
  int reps = 3;
  bool quick = false;
  app.add_option("--sizes", sizes, "Square matrix sizes to time")
      ->capture_default_str();
  app.add_option("--reps", reps, "Repetitions per measurement (best is kept)")
      ->capture_default_str();
  app.add_flag("--quick", quick, "Small sizes, one repetition (smoke test)");
  CLI11_PARSE(app, argc, argv);

  if (quick) {
    sizes = {32, 64};
    reps = 1;
  }

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels delegate to serial\n");
#endif

  Rng rng(0xb3c9);
  std::vector<Row> rows;
  bool all_match = true;

  for (std::size_t n : sizes) {
    ComplexMatrix a = prodrep::fixtures::random_matrix(rng, n, n);
    ComplexMatrix b = prodrep::fixtures::random_matrix(rng, n, n);

    {
      ComplexMatrix rs(1, 1), rp(1, 1);
      const double ts = seconds([&] { rs = kernels::serial::gemm(a, b); },
                                reps);
      const double tp = seconds([&] { rp = kernels::omp::gemm(a, b); }, reps);
      const bool match = bitwise_equal(rs, rp);
      all_match = all_match && match;
      rows.push_back({"gemm", n, ts * 1e3, tp * 1e3, match});
    }

    {
      ComplexMatrix rs(1, 1), rp(1, 1);
      const double ts = seconds(
          [&] {
            rs = kernels::serial::weighted_sum(Complex(0.25), a,
                                               Complex(-2.0), b);
          },
          reps);
      const double tp = seconds(
          [&] {
            rp = kernels::omp::weighted_sum(Complex(0.25), a, Complex(-2.0),
                                            b);
          },
          reps);
      const bool match = bitwise_equal(rs, rp);
      all_match = all_match && match;
      rows.push_back({"weighted_sum", n, ts * 1e3, tp * 1e3, match});
    }

    {
      double vs = 0.0, vp = 0.0;
      const double ts =
          seconds([&] { vs = kernels::serial::frobenius_norm(a); }, reps);
      const double tp =
          seconds([&] { vp = kernels::omp::frobenius_norm(a); }, reps);
      const bool match = std::memcmp(&vs, &vp, sizeof(double)) == 0;
      all_match = all_match && match;
      rows.push_back({"frobenius_norm", n, ts * 1e3, tp * 1e3, match});
    }
  }

  print_rows(rows);
  if (!all_match) {
    std::printf("kernel outputs differ between serial and parallel\n");
    return 1;
  }
  return 0;
}
