#include <cstring>
#include <vector>

#include "doctest.h"
#include "prodrep/errors.hpp"
#include "prodrep/kernels.hpp"
#include "prodrep/rng.hpp"

using namespace prodrep;
using algebra::Complex;
using algebra::ComplexMatrix;

namespace {

ComplexMatrix filled(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (Complex& v : m.data()) v = rng.complex_gaussian();
  return m;
}

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data().data(), b.data().data(),
                     a.data().size() * sizeof(Complex)) == 0;
}

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference bit for bit") {
  Rng rng(42);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
      {1, 1}, {2, 3}, {17, 17}, {64, 64}, {129, 65}};
  for (auto [r, c] : shapes) {
    ComplexMatrix a = filled(rng, r, c);
    ComplexMatrix b = filled(rng, c, r);
    ComplexMatrix d = filled(rng, r, c);

    CHECK(bitwise_equal(kernels::serial::gemm(a, b), kernels::omp::gemm(a, b)));
    CHECK(bitwise_equal(
        kernels::serial::weighted_sum({0.5, -2.0}, a, {1.0, 3.0}, d),
        kernels::omp::weighted_sum({0.5, -2.0}, a, {1.0, 3.0}, d)));

    ComplexMatrix acc1 = filled(rng, r, c);
    ComplexMatrix acc2 = acc1;
    kernels::serial::accumulate_scaled(acc1, {-1.0, 0.25}, a);
    kernels::omp::accumulate_scaled(acc2, {-1.0, 0.25}, a);
    CHECK(bitwise_equal(acc1, acc2));

    const double n1 = kernels::serial::frobenius_norm(a);
    const double n2 = kernels::omp::frobenius_norm(a);
    CHECK(std::memcmp(&n1, &n2, sizeof(double)) == 0);

    const double m1 = kernels::serial::max_abs_diff(a, d);
    const double m2 = kernels::omp::max_abs_diff(a, d);
    CHECK(std::memcmp(&m1, &m2, sizeof(double)) == 0);
  }
}

TEST_CASE("dispatch result does not depend on the parallel switch") {
  Rng rng(7);
  ComplexMatrix a = filled(rng, 130, 140);
  ComplexMatrix b = filled(rng, 140, 120);

  const bool was = kernels::parallel_enabled();
  kernels::set_parallel(true);
  ComplexMatrix on = kernels::gemm(a, b);
  kernels::set_parallel(false);
  ComplexMatrix off = kernels::gemm(a, b);
  kernels::set_parallel(was);

  CHECK(bitwise_equal(on, off));
  CHECK(bitwise_equal(on, kernels::serial::gemm(a, b)));
}

TEST_CASE("gemm computes the usual product") {
  ComplexMatrix a = ComplexMatrix::of({{1.0, 2.0}, {3.0, 4.0}});
  ComplexMatrix b = ComplexMatrix::of({{5.0, 6.0}, {7.0, 8.0}});
  ComplexMatrix c = kernels::gemm(a, b);
  CHECK(c(0, 0) == Complex(19.0));
  CHECK(c(0, 1) == Complex(22.0));
  CHECK(c(1, 0) == Complex(43.0));
  CHECK(c(1, 1) == Complex(50.0));

  const Complex i(0.0, 1.0);
  ComplexMatrix u = ComplexMatrix::of({{1.0 + i, 0.0}, {0.0, 2.0}});
  ComplexMatrix v = ComplexMatrix::of({{1.0 - i, 0.0}, {0.0, 0.5}});
  ComplexMatrix w = kernels::gemm(u, v);
  CHECK(w(0, 0) == Complex(2.0));
  CHECK(w(1, 1) == Complex(1.0));

  // multiplying by the identity is exact
  Rng rng(3);
  ComplexMatrix r = filled(rng, 9, 9);
  CHECK(bitwise_equal(kernels::gemm(r, ComplexMatrix::identity(9)), r));
}

TEST_CASE("norms and differences") {
  ComplexMatrix a = ComplexMatrix::of({{3.0, 4.0}});
  CHECK(kernels::frobenius_norm(a) == doctest::Approx(5.0).epsilon(1e-15));

  ComplexMatrix b = ComplexMatrix::of({{Complex(0.0, 3.0), 4.0}});
  CHECK(kernels::frobenius_norm(b) == doctest::Approx(5.0).epsilon(1e-15));

  ComplexMatrix c = ComplexMatrix::of({{Complex(0.0, 3.5), 4.0}});
  CHECK(kernels::max_abs_diff(b, c) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kernels::max_abs_diff(b, b) == 0.0);
}

TEST_CASE("weighted sums and accumulation") {
  ComplexMatrix a = ComplexMatrix::of({{1.0, 2.0}});
  ComplexMatrix b = ComplexMatrix::of({{10.0, -4.0}});
  ComplexMatrix c = kernels::weighted_sum(2.0, a, 0.5, b);
  CHECK(c(0, 0) == Complex(7.0));
  CHECK(c(0, 1) == Complex(2.0));

  ComplexMatrix acc(1, 2);
  kernels::accumulate_scaled(acc, Complex(0.0, 1.0), a);
  CHECK(acc(0, 0) == Complex(0.0, 1.0));
  CHECK(acc(0, 1) == Complex(0.0, 2.0));
}

TEST_CASE("shape mismatches are rejected") {
  ComplexMatrix a(2, 3);
  ComplexMatrix b(2, 3);
  ComplexMatrix c(3, 2);
  CHECK_THROWS_AS(kernels::gemm(a, b), DomainError);
  CHECK_THROWS_AS(kernels::weighted_sum(1.0, a, 1.0, c), DomainError);
  CHECK_THROWS_AS(kernels::max_abs_diff(a, c), DomainError);
  ComplexMatrix acc(2, 2);
  CHECK_THROWS_AS(kernels::accumulate_scaled(acc, 1.0, a), DomainError);
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DomainError);
}
