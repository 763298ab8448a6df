#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prodrep/cmatrix.hpp"
#include "prodrep/filters.hpp"

namespace prodrep::reps {
class Representation;
}

namespace prodrep::algebra {

using filters::Partition;
using filters::Subset;
using filters::Universe;

// The index set together with the factor dimension at each point.
class IndexSet {
 public:
  IndexSet(Universe universe, std::vector<std::size_t> dims);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t points() const noexcept { return universe_.size(); }
  std::size_t dim(std::size_t i) const;
  std::size_t dim(const std::string& label) const;
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  bool abelian() const noexcept;  // every factor one dimensional

  // Points grouped by factor dimension, blocks ordered by ascending
  // dimension. Used to pick the carrier size for a synthesized
  // representation.
  Partition dimension_partition() const;

  bool operator==(const IndexSet& o) const noexcept {
    return universe_ == o.universe_ && dims_ == o.dims_;
  }

 private:
  Universe universe_;
  std::vector<std::size_t> dims_;
};

// One matrix per point of the index set, the block at point x being the
// component in the x-th factor.
class AlgebraElement {
 public:
  explicit AlgebraElement(IndexSet index_set);  // zero element

  static AlgebraElement zero(const IndexSet& is) { return AlgebraElement(is); }
  static AlgebraElement unit(const IndexSet& is);

  const IndexSet& index_set() const noexcept { return index_set_; }
  const ComplexMatrix& block(std::size_t i) const { return blocks_.at(i); }
  const ComplexMatrix& block(const std::string& label) const;
  void set_block(std::size_t i, ComplexMatrix m);
  void set_block(const std::string& label, ComplexMatrix m);

 private:
  IndexSet index_set_;
  std::vector<ComplexMatrix> blocks_;
};

// Identity on the factors inside u, zero elsewhere.
AlgebraElement indicator(const IndexSet& index_set, const Subset& u);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(Complex alpha, const AlgebraElement& a);

// Product-algebra norm: max over blocks of the Frobenius norm.
double norm(const AlgebraElement& a);
double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);

// Eigenvalues with multiplicity, sorted by (real, imag).
std::vector<Complex> spectrum(const ComplexMatrix& m);

struct IdempotentReport {
  std::vector<Complex> eigenvalues;  // sorted as in spectrum()
  double max_distance_to_01 = 0.0;   // max over eigenvalues of dist to {0,1}
  bool zero_occurs = false;
  bool one_occurs = false;
  bool nontrivial = false;  // input is neither (near) 0 nor (near) identity
  bool ok = false;          // spectrum lies in {0,1}; both occur if nontrivial
};

// Requires ||e^2 - e|| <= tol * (1 + ||e||^2), else a precondition error.
IdempotentReport check_idempotent_spectrum(const ComplexMatrix& e, double tol);

struct PositiveSpectrumReport {
  std::vector<Complex> eigenvalues;
  double min_real = 0.0;
  double max_abs_imag = 0.0;
  bool ok = false;  // min_real >= -tol and max_abs_imag <= tol
};

// For an abelian index set (all dims 1) and entrywise real nonnegative f,
// checks that the image of f under the representation has spectrum on the
// nonnegative real axis up to tol. Non-abelian input or an f with negative
// or complex blocks is a precondition error.
PositiveSpectrumReport check_positive_spectrum(const AlgebraElement& f,
                                               const reps::Representation& pi,
                                               double tol);

}  // namespace prodrep::algebra
