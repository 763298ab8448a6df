#pragma once

#include <cstddef>
#include <vector>

#include "prodrep/algebra.hpp"
#include "prodrep/reps.hpp"
#include "prodrep/rng.hpp"

// Deterministic generators for test and benchmark inputs. Everything is a
// pure function of the Rng state, so a seed pins the full fixture.

namespace prodrep::fixtures {

using algebra::AlgebraElement;
using algebra::Complex;
using algebra::ComplexMatrix;
using algebra::IndexSet;
using reps::Representation;

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

// Invertible with 2-norm condition number at most cond_cap (singular values
// spread log-uniformly over [cap^-1/2, cap^1/2]).
ComplexMatrix random_invertible(Rng& rng, std::size_t n, double cond_cap);

// Index set with labels x0, x1, ... and dimensions uniform in [1, max_dim].
IndexSet random_index_set(Rng& rng, std::size_t points, std::size_t max_dim);

AlgebraElement random_element(Rng& rng, const IndexSet& is);

// For an all-dims-1 index set: entrywise real, uniform in [0, 2).
AlgebraElement random_nonneg_element(Rng& rng, const IndexSet& is);

// The canonical decomposable model: block diagonal carrier holding, for each
// listed point in order, mult copies of that factor's evaluation. Points not
// listed act as zero.
Representation block_model(const IndexSet& is,
                           const std::vector<std::size_t>& support,
                           const std::vector<std::size_t>& mults);

// Images conjugated by s (computed with s^-1 once).
Representation conjugated(const Representation& r, const ComplexMatrix& s,
                          double tol);

struct RandomDecomposable {
  Representation rep;
  std::vector<std::size_t> support;  // point indices, ascending
  std::vector<std::size_t> mults;    // parallel to support
  ComplexMatrix s0;                  // the hidden conjugation
};

// A conjugated block model with random support (at most max_support points),
// multiplicities in [1, max_mult] and cond(s0) <= cond_cap.
RandomDecomposable random_decomposable(Rng& rng, const IndexSet& is,
                                       std::size_t max_support,
                                       std::size_t max_mult, double cond_cap);

// Two complementary idempotents (1 +- A)/2 built from the involution
// A = [[0, 1/h], [h, 0]], giving a representation of the two-point
// all-dims-1 algebra on a two-dimensional carrier. Valid for any h != 0;
// reducible but with no orthogonal invariant splitting when |h| != 1.
Representation involution_pair_rep(Complex h);
IndexSet involution_index_set();

}  // namespace prodrep::fixtures
