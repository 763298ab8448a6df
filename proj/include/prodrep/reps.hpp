#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prodrep/algebra.hpp"
#include "prodrep/cmatrix.hpp"
#include "prodrep/filters.hpp"

namespace prodrep::reps {

using algebra::AlgebraElement;
using algebra::Complex;
using algebra::ComplexMatrix;
using algebra::IndexSet;
using filters::Filter;
using filters::Subset;

// A representation given by the images of the matrix units of every factor:
// image(x, i, j) is the carrier-space matrix the (i, j) matrix unit of
// factor x maps to, with 1-based i, j up to the factor dimension.
//
// Construction checks shapes only. The algebraic relations are checked by
// validate_representation; the remaining operations assume they hold.
class Representation {
 public:
  Representation(IndexSet index_set, std::size_t carrier_dim,
                 std::vector<std::vector<ComplexMatrix>> images_per_point);

  const IndexSet& index_set() const noexcept { return index_set_; }
  std::size_t carrier_dim() const noexcept { return carrier_dim_; }

  const ComplexMatrix& image(std::size_t x, std::size_t i,
                             std::size_t j) const;
  const ComplexMatrix& image(const std::string& label, std::size_t i,
                             std::size_t j) const;

 private:
  IndexSet index_set_;
  std::size_t carrier_dim_;
  // images_[x] holds the n_x * n_x unit images of point x in row-major
  // (i, j) order.
  std::vector<std::vector<ComplexMatrix>> images_;
};

struct ValidationReport {
  double worst_violation = 0.0;  // scaled defect of the worst relation
  std::string worst_relation;    // human-readable description of it
};

// Checks all matrix-unit products and unitality. Returns the worst scaled
// defect when the representation is valid; throws
// DomainError(not_a_representation) naming the offending relation otherwise.
ValidationReport validate_representation(const Representation& r, double tol);

// pi(b) extended linearly from the generator images.
ComplexMatrix evaluate(const Representation& r, const AlgebraElement& b);

// pi applied to the indicator of {x}: the sum of the diagonal unit images
// of point x. An idempotent commuting with the whole image.
ComplexMatrix projector_at(const Representation& r, std::size_t x);
ComplexMatrix projector_at(const Representation& r, const std::string& label);

// Points whose factor acts nonzero, in label order.
std::vector<std::size_t> support(const Representation& r, double tol);

struct DecompositionResult {
  std::vector<std::size_t> support;         // point indices, label order
  std::vector<std::size_t> multiplicities;  // parallel to support
  ComplexMatrix intertwiner{1, 1};          // S with S^-1 pi(b) S block diagonal
  double residual = 0.0;
  double condition_number = 0.0;
};

// Splits the carrier into multiplicity-many copies of each supported factor.
// After conjugating by the returned intertwiner, pi(b) is block diagonal
// with, for each supported y in label order, mult(y) consecutive copies of
// b(y). Residual is the worst scaled deviation of that identity over all
// generators and 20 random probe elements.
DecompositionResult decompose(const Representation& r, double tol);

// The ultrafilter whose kernel point carries the whole (irreducible) action.
// Requires is_irreducible(r); verifies exhaustively for up to 10 points that
// indicator images are the identity exactly on sets containing the point.
Filter extract_filter(const Representation& r, double tol);

// The representation an ultrafilter induces: the factor at the kernel point
// acts by its matrix units conjugated by basis (identity when absent), all
// other factors act as zero. The carrier size is selected through the
// dimension partition of the index set.
Representation build_from_filter(
    const Filter& f, const IndexSet& index_set,
    const std::map<std::string, ComplexMatrix>* bases = nullptr);

// Dimension of the space of matrices commuting with every generator image,
// via the nullity of the stacked commutator system.
std::size_t commutant_dimension(const Representation& r, double tol);

bool is_irreducible(const Representation& r, double tol);

struct EquivalenceCertificate {
  bool equivalent = false;
  std::optional<ComplexMatrix> intertwiner;  // T with T pi1(b) = pi2(b) T
  double defect = 0.0;  // worst scaled deviation of the identity above
};

// Equivalence holds iff the two decompositions agree in support and
// multiplicities; the certificate intertwiner is assembled from the two
// decomposition intertwiners and re-verified on all generators.
EquivalenceCertificate equivalent(const Representation& r1,
                                  const Representation& r2, double tol);

// The factor evaluation at point x: carrier C^{n_x}, unit images of x are
// the matrix units themselves, all other factors act as zero.
Representation point_evaluation(const IndexSet& index_set, std::size_t x);

// One point evaluation per point, in label order; pairwise inequivalent and
// each irreducible.
std::vector<Representation> enumerate_irreducibles(const IndexSet& index_set);

struct InclusionReport {
  std::size_t subsets_checked = 0;
  std::size_t support_size = 0;
};

// Exhaustively verifies (up to 10 points) that the family of subsets acting
// nonzero is upward closed. A violation means the input was not a
// representation and raises DomainError(internal_consistency).
InclusionReport inclusion_property_check(const Representation& r, double tol);

}  // namespace prodrep::reps
