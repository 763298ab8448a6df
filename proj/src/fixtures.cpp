#include "prodrep/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "prodrep/errors.hpp"
#include "prodrep/kernels.hpp"
#include "prodrep/linalg.hpp"
#include "prodrep/tolerance.hpp"

namespace prodrep::fixtures {

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (Complex& v : m.data()) v = rng.complex_gaussian();
  return m;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  return linalg::qr_unitary(random_matrix(rng, n, n));
}

ComplexMatrix random_invertible(Rng& rng, std::size_t n, double cond_cap) {
  if (cond_cap < 1.0) {
    throw DomainError(errc::invalid_input, "condition cap must be >= 1");
  }
  const ComplexMatrix u = random_unitary(rng, n);
  const ComplexMatrix v = random_unitary(rng, n);
  ComplexMatrix dvh(n, n);  // diag(sigma) * v^H
  for (std::size_t i = 0; i < n; ++i) {
    const double sigma = std::pow(cond_cap, rng.uniform() - 0.5);
    for (std::size_t j = 0; j < n; ++j) dvh(i, j) = sigma * std::conj(v(j, i));
  }
  return kernels::gemm(u, dvh);
}

IndexSet random_index_set(Rng& rng, std::size_t points, std::size_t max_dim) {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < points; ++i) {
    labels.push_back("x" + std::to_string(i));
    dims.push_back(1 + rng.below(max_dim));
  }
  return IndexSet(filters::Universe(labels), dims);
}

AlgebraElement random_element(Rng& rng, const IndexSet& is) {
  AlgebraElement b(is);
  for (std::size_t x = 0; x < is.points(); ++x) {
    b.set_block(x, random_matrix(rng, is.dim(x), is.dim(x)));
  }
  return b;
}

AlgebraElement random_nonneg_element(Rng& rng, const IndexSet& is) {
  if (!is.abelian()) {
    throw DomainError(errc::precondition,
                      "nonnegative elements are defined for all-dims-1 "
                      "index sets");
  }
  AlgebraElement f(is);
  for (std::size_t x = 0; x < is.points(); ++x) {
    ComplexMatrix m(1, 1);
    m(0, 0) = 2.0 * rng.uniform();
    f.set_block(x, std::move(m));
  }
  return f;
}

Representation block_model(const IndexSet& is,
                           const std::vector<std::size_t>& support,
                           const std::vector<std::size_t>& mults) {
  if (support.size() != mults.size() || support.empty()) {
    throw DomainError(errc::invalid_input,
                      "support and multiplicities must align and be "
                      "nonempty");
  }
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw DomainError(errc::invalid_input,
                      "support points must be strictly ascending");
  }
  std::size_t carrier = 0;
  for (std::size_t t = 0; t < support.size(); ++t) {
    if (support[t] >= is.points() || mults[t] == 0) {
      throw DomainError(errc::invalid_input, "bad support point or zero "
                                             "multiplicity");
    }
    carrier += mults[t] * is.dim(support[t]);
  }

  std::vector<std::vector<ComplexMatrix>> images;
  for (std::size_t x = 0; x < is.points(); ++x) {
    const std::size_t n = is.dim(x);
    std::vector<ComplexMatrix> pt(n * n, ComplexMatrix(carrier, carrier));
    images.push_back(std::move(pt));
  }
  std::size_t off = 0;
  for (std::size_t t = 0; t < support.size(); ++t) {
    const std::size_t y = support[t];
    const std::size_t n = is.dim(y);
    for (std::size_t c = 0; c < mults[t]; ++c) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          images[y][(i - 1) * n + (j - 1)](off + i - 1, off + j - 1) = 1.0;
        }
      }
      off += n;
    }
  }
  return Representation(is, carrier, std::move(images));
}

Representation conjugated(const Representation& r, const ComplexMatrix& s,
                          double tol) {
  const std::size_t m = r.carrier_dim();
  if (s.rows() != m || s.cols() != m) {
    throw DomainError(errc::invalid_input,
                      "conjugator size does not match the carrier");
  }
  const ComplexMatrix s_inv = linalg::inverse(s, tol);
  std::vector<std::vector<ComplexMatrix>> images;
  for (std::size_t x = 0; x < r.index_set().points(); ++x) {
    const std::size_t n = r.index_set().dim(x);
    std::vector<ComplexMatrix> pt;
    pt.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        pt.push_back(
            kernels::gemm(kernels::gemm(s, r.image(x, i, j)), s_inv));
      }
    }
    images.push_back(std::move(pt));
  }
  return Representation(r.index_set(), m, std::move(images));
}

RandomDecomposable random_decomposable(Rng& rng, const IndexSet& is,
                                       std::size_t max_support,
                                       std::size_t max_mult,
                                       double cond_cap) {
  const std::size_t limit = std::min(max_support, is.points());
  const std::size_t k = 1 + rng.below(limit);

  std::vector<std::size_t> points(is.points());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = i;
  for (std::size_t i = points.size(); i > 1; --i) {
    std::swap(points[i - 1], points[rng.below(i)]);
  }
  std::vector<std::size_t> support(points.begin(), points.begin() + k);
  std::sort(support.begin(), support.end());

  std::vector<std::size_t> mults;
  for (std::size_t t = 0; t < k; ++t) mults.push_back(1 + rng.below(max_mult));

  Representation base = block_model(is, support, mults);
  ComplexMatrix s0 = random_invertible(rng, base.carrier_dim(), cond_cap);
  Representation rep = conjugated(base, s0, kDefaultTol);
  return RandomDecomposable{std::move(rep), std::move(support),
                            std::move(mults), std::move(s0)};
}

IndexSet involution_index_set() {
  return IndexSet(filters::Universe({"plus", "minus"}), {1, 1});
}

Representation involution_pair_rep(Complex h) {
  if (h == Complex(0.0)) {
    throw DomainError(errc::invalid_input,
                      "involution parameter must be nonzero");
  }
  const Complex half(0.5);
  // (1 +- A)/2 for A = [[0, 1/h], [h, 0]]; A^2 = I makes both idempotent
  // with product zero and sum one.
  ComplexMatrix plus(2, 2);
  plus(0, 0) = half;
  plus(0, 1) = half / h;
  plus(1, 0) = half * h;
  plus(1, 1) = half;
  ComplexMatrix minus(2, 2);
  minus(0, 0) = half;
  minus(0, 1) = -half / h;
  minus(1, 0) = -half * h;
  minus(1, 1) = half;

  std::vector<std::vector<ComplexMatrix>> images;
  images.push_back({plus});
  images.push_back({minus});
  return Representation(involution_index_set(), 2, std::move(images));
}

}  // namespace prodrep::fixtures
