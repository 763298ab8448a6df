#include <cmath>
#include <vector>

#include "prodrep/kernels.hpp"

namespace prodrep::kernels::serial {

ComplexMatrix gemm(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
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
  const std::size_t total = acc.rows() * acc.cols();
  for (std::size_t t = 0; t < total; ++t) {
    acc.data()[t] += alpha * a.data()[t];
  }
}

ComplexMatrix weighted_sum(Complex alpha, const ComplexMatrix& a,
                           Complex beta, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), a.cols());
  const std::size_t total = a.rows() * a.cols();
  for (std::size_t t = 0; t < total; ++t) {
    c.data()[t] = alpha * a.data()[t] + beta * b.data()[t];
  }
  return c;
}

double frobenius_norm(const ComplexMatrix& a) {
  // One partial per row, combined in row order. The OpenMP variant uses the
  // same reduction tree, which keeps the two bit identical.
  std::vector<double> partial(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
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
  for (std::size_t i = 0; i < a.rows(); ++i) {
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

}  // namespace prodrep::kernels::serial
