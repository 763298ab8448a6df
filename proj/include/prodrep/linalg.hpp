#pragma once

#include <cstddef>
#include <vector>

#include "prodrep/cmatrix.hpp"

// Factorization-backed routines. The implementations delegate to Eigen; this
// header keeps that behind a plain ComplexMatrix interface so the rest of
// the library stays solver agnostic.

namespace prodrep::linalg {

using algebra::Complex;
using algebra::ComplexMatrix;

// Eigenvalues of a square matrix, in solver order (callers sort as needed).
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& a);

double spectral_norm(const ComplexMatrix& a);

// 2-norm condition number; +infinity for numerically singular input.
double cond2(const ComplexMatrix& a);

// Inverse of a square matrix. Pivots below tol times the largest pivot are
// treated as zero; a singular matrix raises DomainError(singular_matrix).
ComplexMatrix inverse(const ComplexMatrix& a, double tol);

// Numerical rank: number of singular values >= tol * max(sigma_max,
// scale_floor). The floor lets callers supply the scale of the data the
// matrix was assembled from, so a matrix that is pure roundoff noise
// (sigma_max itself tiny) reads as rank zero instead of full. Tall inputs
// are first reduced by QR so only a cols-by-cols SVD is ever needed.
std::size_t rank(const ComplexMatrix& a, double tol, double scale_floor = 0.0);

// Orthonormal basis of the column space as matrix columns, computed by
// column-pivoted QR with the rank cut at tol times the leading diagonal of R.
// Each basis column is rotated so its largest-magnitude entry is real and
// positive, which pins the result down to a deterministic representative.
ComplexMatrix range_basis(const ComplexMatrix& a, double tol);

// Q factor of the QR decomposition of a square matrix, with phases chosen so
// the diagonal of R is real and nonnegative (the standard unique choice).
ComplexMatrix qr_unitary(const ComplexMatrix& a);

}  // namespace prodrep::linalg
