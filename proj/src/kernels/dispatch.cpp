#include <atomic>

#include "prodrep/errors.hpp"
#include "prodrep/kernels.hpp"

namespace prodrep::kernels {

namespace {

#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif

// Below this many scalar operations the fork/join overhead dominates.
constexpr std::size_t kParallelCutoff = 16 * 1024;

bool route_parallel(std::size_t work) {
  return g_parallel.load(std::memory_order_relaxed) && work >= kParallelCutoff;
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(errc::invalid_input,
                      std::string("matrix shape mismatch in ") + op);
  }
}

}  // namespace

bool parallel_enabled() noexcept {
  return g_parallel.load(std::memory_order_relaxed);
}

void set_parallel(bool on) noexcept {
  g_parallel.store(on, std::memory_order_relaxed);
}

ComplexMatrix gemm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError(errc::invalid_input, "matrix shape mismatch in product");
  }
  const std::size_t work = a.rows() * b.cols() * a.cols();
  return route_parallel(work) ? omp::gemm(a, b) : serial::gemm(a, b);
}

void accumulate_scaled(ComplexMatrix& acc, Complex alpha,
                       const ComplexMatrix& a) {
  require_same_shape(acc, a, "accumulation");
  const std::size_t work = acc.rows() * acc.cols();
  if (route_parallel(work)) {
    omp::accumulate_scaled(acc, alpha, a);
  } else {
    serial::accumulate_scaled(acc, alpha, a);
  }
}

ComplexMatrix weighted_sum(Complex alpha, const ComplexMatrix& a,
                           Complex beta, const ComplexMatrix& b) {
  require_same_shape(a, b, "weighted sum");
  const std::size_t work = a.rows() * a.cols();
  return route_parallel(work) ? omp::weighted_sum(alpha, a, beta, b)
                              : serial::weighted_sum(alpha, a, beta, b);
}

double frobenius_norm(const ComplexMatrix& a) {
  const std::size_t work = a.rows() * a.cols();
  return route_parallel(work) ? omp::frobenius_norm(a)
                              : serial::frobenius_norm(a);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "difference");
  const std::size_t work = a.rows() * a.cols();
  return route_parallel(work) ? omp::max_abs_diff(a, b)
                              : serial::max_abs_diff(a, b);
}

}  // namespace prodrep::kernels
