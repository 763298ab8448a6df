#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace prodrep::algebra {

using Complex = std::complex<double>;

// Dense complex matrix, row major. Dimensions are fixed at construction and
// always positive.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix of(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  // Bounds-checked access; throws DomainError(invalid_input).
  Complex& at(std::size_t i, std::size_t j);
  const Complex& at(std::size_t i, std::size_t j) const;

  std::vector<Complex>& data() noexcept { return data_; }
  const std::vector<Complex>& data() const noexcept { return data_; }

  bool all_finite() const noexcept;
  // Throws DomainError(invalid_input) when an entry is NaN or infinite.
  void require_finite() const;

  bool operator==(const ComplexMatrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix adjoint(const ComplexMatrix& a);

}  // namespace prodrep::algebra
