#include "prodrep/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "prodrep/errors.hpp"

namespace prodrep::linalg {

namespace {

using EMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using ERowMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMat to_eigen(const ComplexMatrix& a) {
  return Eigen::Map<const ERowMat>(a.data().data(),
                                   static_cast<Eigen::Index>(a.rows()),
                                   static_cast<Eigen::Index>(a.cols()));
}

ComplexMatrix from_eigen(const EMat& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                    static_cast<std::size_t>(m.cols()));
  Eigen::Map<ERowMat>(out.data().data(), m.rows(), m.cols()) = m;
  return out;
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DomainError(errc::invalid_input,
                      std::string(op) + " requires a square matrix");
  }
}

// Rotates each column so its largest-magnitude entry is real positive.
void normalize_column_phases(EMat& q) {
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Eigen::Index imax = 0;
    q.col(j).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = q(imax, j);
    const double mag = std::abs(pivot);
    if (mag > 0.0) q.col(j) *= std::conj(pivot) / mag;
  }
}

}  // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
  require_square(a, "eigenvalue computation");
  Eigen::ComplexEigenSolver<EMat> solver(to_eigen(a), false);
  if (solver.info() != Eigen::Success) {
    throw DomainError(errc::internal_consistency,
                      "eigenvalue iteration failed to converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  Eigen::BDCSVD<EMat> svd(to_eigen(a));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double spectral_norm(const ComplexMatrix& a) {
  return singular_values(a).front();
}

double cond2(const ComplexMatrix& a) {
  const auto sv = singular_values(a);
  if (sv.back() <= 0.0) return std::numeric_limits<double>::infinity();
  return sv.front() / sv.back();
}

ComplexMatrix inverse(const ComplexMatrix& a, double tol) {
  require_square(a, "inversion");
  Eigen::FullPivLU<EMat> lu(to_eigen(a));
  lu.setThreshold(tol);
  if (!lu.isInvertible()) {
    throw DomainError(errc::singular_matrix,
                      "matrix is singular at the working tolerance");
  }
  return from_eigen(lu.inverse());
}

std::size_t rank(const ComplexMatrix& a, double tol, double scale_floor) {
  EMat m = to_eigen(a);
  if (m.rows() > m.cols()) {
    // R of the (unpivoted) QR has the same singular values as the input, so
    // the SVD only ever runs on a cols-by-cols triangle.
    Eigen::HouseholderQR<EMat> qr(m);
    EMat r = qr.matrixQR()
                 .topRows(m.cols())
                 .template triangularView<Eigen::Upper>();
    m = r;
  }
  Eigen::BDCSVD<EMat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cutoff = tol * std::max(sv(0), scale_floor);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) >= cutoff) ++r;
  }
  return r;
}

ComplexMatrix range_basis(const ComplexMatrix& a, double tol) {
  const EMat m = to_eigen(a);
  Eigen::ColPivHouseholderQR<EMat> qr(m);
  const EMat r = qr.matrixR();
  const double lead = std::abs(r(0, 0));
  Eigen::Index rank = 0;
  const Eigen::Index kmax = std::min(r.rows(), r.cols());
  for (Eigen::Index k = 0; k < kmax; ++k) {
    if (std::abs(r(k, k)) > tol * lead) ++rank;
  }
  if (rank == 0) {
    throw DomainError(errc::invalid_input, "matrix has numerical rank zero");
  }
  EMat q = qr.householderQ() * EMat::Identity(m.rows(), rank);
  normalize_column_phases(q);
  return from_eigen(q);
}

ComplexMatrix qr_unitary(const ComplexMatrix& a) {
  require_square(a, "unitary extraction");
  const EMat m = to_eigen(a);
  Eigen::HouseholderQR<EMat> qr(m);
  EMat q = qr.householderQ();
  const EMat r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return from_eigen(q);
}

}  // namespace prodrep::linalg
