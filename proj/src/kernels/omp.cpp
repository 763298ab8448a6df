#include <cmath>
#include <cstdint>
#include <vector>

#include "prodrep/kernels.hpp"

// Each loop body matches the serial implementation exactly; only independent
// iterations are distributed across threads.

namespace prodrep::kernels::omp {

#ifdef _OPENMP

ComplexMatrix gemm(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  const std::int64_t nrows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

void accumulate_scaled(ComplexMatrix& acc, Complex alpha,
                       const ComplexMatrix& a) {
  const std::int64_t total = static_cast<std::int64_t>(acc.rows() * acc.cols());
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < total; ++t) {
    acc.data()[t] += alpha * a.data()[t];
  }
}

ComplexMatrix weighted_sum(Complex alpha, const ComplexMatrix& a,
                           Complex beta, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), a.cols());
  const std::int64_t total = static_cast<std::int64_t>(a.rows() * a.cols());
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < total; ++t) {
    c.data()[t] = alpha * a.data()[t] + beta * b.data()[t];
  }
  return c;
}

double frobenius_norm(const ComplexMatrix& a) {
  std::vector<double> partial(a.rows(), 0.0);
  const std::int64_t nrows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nrows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex& v = a(i, j);
      s += v.real() * v.real() + v.imag() * v.imag();
    }
    partial[i] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return std::sqrt(total);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::vector<double> partial(a.rows(), 0.0);
  const std::int64_t nrows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nrows; ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
    }
    partial[i] = m;
  }
  double best = 0.0;
  for (double p : partial) best = std::max(best, p);
  return best;
}

#else  // no OpenMP at build time: keep the interface, delegate to serial

ComplexMatrix gemm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return serial::gemm(a, b);
}

void accumulate_scaled(ComplexMatrix& acc, Complex alpha,
                       const ComplexMatrix& a) {
  serial::accumulate_scaled(acc, alpha, a);
}

ComplexMatrix weighted_sum(Complex alpha, const ComplexMatrix& a,
                           Complex beta, const ComplexMatrix& b) {
  return serial::weighted_sum(alpha, a, beta, b);
}

double frobenius_norm(const ComplexMatrix& a) {
  return serial::frobenius_norm(a);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return serial::max_abs_diff(a, b);
}

#endif

}  // namespace prodrep::kernels::omp
