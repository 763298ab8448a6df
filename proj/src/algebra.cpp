#include "prodrep/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "prodrep/errors.hpp"
#include "prodrep/kernels.hpp"
#include "prodrep/linalg.hpp"

namespace prodrep::algebra {

IndexSet::IndexSet(Universe universe, std::vector<std::size_t> dims)
    : universe_(std::move(universe)), dims_(std::move(dims)) {
  if (dims_.size() != universe_.size()) {
    throw DomainError(errc::invalid_input,
                      "index set needs one dimension per point");
  }
  for (std::size_t d : dims_) {
    if (d == 0) {
      throw DomainError(errc::invalid_input,
                        "factor dimensions must be positive");
    }
  }
}

std::size_t IndexSet::dim(std::size_t i) const {
  if (i >= dims_.size()) {
    throw DomainError(errc::invalid_input, "point index outside universe");
  }
  return dims_[i];
}

std::size_t IndexSet::dim(const std::string& label) const {
  return dims_[universe_.index_of(label)];
}

bool IndexSet::abelian() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(),
                     [](std::size_t d) { return d == 1; });
}

Partition IndexSet::dimension_partition() const {
  std::map<std::size_t, std::uint64_t> by_dim;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    by_dim[dims_[i]] |= std::uint64_t{1} << i;
  }
  std::vector<Subset> blocks;
  for (const auto& [d, bits] : by_dim) blocks.emplace_back(bits, points());
  return Partition(universe_, blocks);
}

AlgebraElement::AlgebraElement(IndexSet index_set)
    : index_set_(std::move(index_set)) {
  blocks_.reserve(index_set_.points());
  for (std::size_t i = 0; i < index_set_.points(); ++i) {
    blocks_.emplace_back(index_set_.dim(i), index_set_.dim(i));
  }
}

AlgebraElement AlgebraElement::unit(const IndexSet& is) {
  AlgebraElement e(is);
  for (std::size_t i = 0; i < is.points(); ++i) {
    e.set_block(i, ComplexMatrix::identity(is.dim(i)));
  }
  return e;
}

const ComplexMatrix& AlgebraElement::block(const std::string& label) const {
  return blocks_[index_set_.universe().index_of(label)];
}

void AlgebraElement::set_block(std::size_t i, ComplexMatrix m) {
  if (i >= blocks_.size()) {
    throw DomainError(errc::invalid_input, "point index outside universe");
  }
  const std::size_t d = index_set_.dim(i);
  if (m.rows() != d || m.cols() != d) {
    throw DomainError(errc::invalid_input,
                      "block size does not match the factor dimension");
  }
  blocks_[i] = std::move(m);
}

void AlgebraElement::set_block(const std::string& label, ComplexMatrix m) {
  set_block(index_set_.universe().index_of(label), std::move(m));
}

AlgebraElement indicator(const IndexSet& index_set, const Subset& u) {
  if (u.universe_size() != index_set.points()) {
    throw DomainError(errc::invalid_input,
                      "subset is not over the index set's universe");
  }
  AlgebraElement e(index_set);
  for (std::size_t i : u.indices()) {
    e.set_block(i, ComplexMatrix::identity(index_set.dim(i)));
  }
  return e;
}

namespace {

void require_same_index_set(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.index_set() == b.index_set())) {
    throw DomainError(errc::invalid_input,
                      "elements live over different index sets");
  }
}

}  // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_index_set(a, b);
  AlgebraElement out(a.index_set());
  for (std::size_t i = 0; i < a.index_set().points(); ++i) {
    out.set_block(i, kernels::weighted_sum(1.0, a.block(i), 1.0, b.block(i)));
  }
  return out;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_index_set(a, b);
  AlgebraElement out(a.index_set());
  for (std::size_t i = 0; i < a.index_set().points(); ++i) {
    out.set_block(i, kernels::gemm(a.block(i), b.block(i)));
  }
  return out;
}

AlgebraElement scale(Complex alpha, const AlgebraElement& a) {
  AlgebraElement out(a.index_set());
  for (std::size_t i = 0; i < a.index_set().points(); ++i) {
    ComplexMatrix m(a.block(i).rows(), a.block(i).cols());
    kernels::accumulate_scaled(m, alpha, a.block(i));
    out.set_block(i, std::move(m));
  }
  return out;
}

double norm(const AlgebraElement& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.index_set().points(); ++i) {
    best = std::max(best, kernels::frobenius_norm(a.block(i)));
  }
  return best;
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_index_set(a, b);
  double best = 0.0;
  for (std::size_t i = 0; i < a.index_set().points(); ++i) {
    best = std::max(best, kernels::max_abs_diff(a.block(i), b.block(i)));
  }
  return best;
}

std::vector<Complex> spectrum(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw DomainError(errc::invalid_input,
                      "spectrum requires a square matrix");
  }
  std::vector<Complex> ev = linalg::eigenvalues(m);
  std::sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return ev;
}

IdempotentReport check_idempotent_spectrum(const ComplexMatrix& e,
                                           double tol) {
  if (!e.is_square()) {
    throw DomainError(errc::invalid_input,
                      "idempotent check requires a square matrix");
  }
  const double enorm = kernels::frobenius_norm(e);
  const ComplexMatrix e2 = kernels::gemm(e, e);
  const double defect =
      kernels::frobenius_norm(kernels::weighted_sum(1.0, e2, -1.0, e));
  if (defect > tol * (1.0 + enorm * enorm)) {
    throw DomainError(errc::precondition,
                      "matrix is not idempotent at the given tolerance");
  }

  IdempotentReport report;
  report.eigenvalues = spectrum(e);
  const std::size_t n = e.rows();
  report.nontrivial =
      kernels::max_abs_diff(e, ComplexMatrix(n, n)) > tol &&
      kernels::max_abs_diff(e, ComplexMatrix::identity(n)) > tol;
  for (const Complex& ev : report.eigenvalues) {
    const double d0 = std::abs(ev);
    const double d1 = std::abs(ev - Complex(1.0));
    report.max_distance_to_01 =
        std::max(report.max_distance_to_01, std::min(d0, d1));
    if (d0 <= tol) report.zero_occurs = true;
    if (d1 <= tol) report.one_occurs = true;
  }
  report.ok = report.max_distance_to_01 <= tol &&
              (!report.nontrivial || (report.zero_occurs && report.one_occurs));
  return report;
}

}  // namespace prodrep::algebra
