#pragma once

#include "prodrep/cmatrix.hpp"

// Dense kernels used by the algebra and representation layers. Each kernel
// has a serial reference implementation and an OpenMP one; both perform the
// per-entry arithmetic in the same order, so their results are bit identical
// and the scheduling choice can never change observable output.
//
// Reductions are structured as one partial per row combined in row order for
// the same reason.

namespace prodrep::kernels {

using algebra::Complex;
using algebra::ComplexMatrix;

// Process-wide switch consulted by the dispatching entry points below.
// Defaults to on when compiled with OpenMP.
bool parallel_enabled() noexcept;
void set_parallel(bool on) noexcept;

ComplexMatrix gemm(const ComplexMatrix& a, const ComplexMatrix& b);
// acc += alpha * a
void accumulate_scaled(ComplexMatrix& acc, Complex alpha, const ComplexMatrix& a);
ComplexMatrix weighted_sum(Complex alpha, const ComplexMatrix& a,
                           Complex beta, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

namespace serial {
ComplexMatrix gemm(const ComplexMatrix& a, const ComplexMatrix& b);
void accumulate_scaled(ComplexMatrix& acc, Complex alpha, const ComplexMatrix& a);
ComplexMatrix weighted_sum(Complex alpha, const ComplexMatrix& a,
                           Complex beta, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace serial

namespace omp {
ComplexMatrix gemm(const ComplexMatrix& a, const ComplexMatrix& b);
void accumulate_scaled(ComplexMatrix& acc, Complex alpha, const ComplexMatrix& a);
ComplexMatrix weighted_sum(Complex alpha, const ComplexMatrix& a,
                           Complex beta, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace omp

}  // namespace prodrep::kernels
