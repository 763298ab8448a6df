#include "prodrep/cmatrix.hpp"

#include <cmath>

#include "prodrep/errors.hpp"

namespace prodrep::algebra {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DomainError(errc::invalid_input, "matrix dimensions must be positive");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::of(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  if (rows.size() == 0) {
    throw DomainError(errc::invalid_input, "matrix dimensions must be positive");
  }
  const std::size_t ncols = rows.begin()->size();
  ComplexMatrix m(rows.size(), ncols);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) {
      throw DomainError(errc::invalid_input, "ragged matrix literal");
    }
    std::size_t j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Complex& ComplexMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) {
    throw DomainError(errc::invalid_input, "matrix index out of range");
  }
  return data_[i * cols_ + j];
}

const Complex& ComplexMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw DomainError(errc::invalid_input, "matrix index out of range");
  }
  return data_[i * cols_ + j];
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

void ComplexMatrix::require_finite() const {
  if (!all_finite()) {
    throw DomainError(errc::invalid_input, "matrix has non-finite entries");
  }
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

}  // namespace prodrep::algebra
