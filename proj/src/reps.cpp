#include "prodrep/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "prodrep/errors.hpp"
#include "prodrep/kernels.hpp"
#include "prodrep/linalg.hpp"
#include "prodrep/rng.hpp"
#include "prodrep/tolerance.hpp"

namespace prodrep::reps {

namespace {

using kernels::accumulate_scaled;
using kernels::frobenius_norm;
using kernels::gemm;
using kernels::weighted_sum;

ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n, n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

bool exactly_zero(const ComplexMatrix& m) {
  for (const Complex& v : m.data()) {
    if (v != Complex(0.0)) return false;
  }
  return true;
}

std::string relation_name(const std::string& lx, std::size_t i, std::size_t j,
                          const std::string& ly, std::size_t k,
                          std::size_t l) {
  std::ostringstream os;
  os << "e(" << lx << "," << i << "," << j << ") * e(" << ly << "," << k
     << "," << l << ")";
  return os.str();
}

// The generator list as algebra elements, in (x, i, j) order.
std::vector<AlgebraElement> generator_elements(const IndexSet& is) {
  std::vector<AlgebraElement> gens;
  for (std::size_t x = 0; x < is.points(); ++x) {
    const std::size_t n = is.dim(x);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        AlgebraElement e(is);
        e.set_block(x, matrix_unit(n, i, j));
        gens.push_back(std::move(e));
      }
    }
  }
  return gens;
}

AlgebraElement random_element(Rng& rng, const IndexSet& is) {
  AlgebraElement b(is);
  for (std::size_t x = 0; x < is.points(); ++x) {
    const std::size_t n = is.dim(x);
    ComplexMatrix m(n, n);
    for (Complex& v : m.data()) v = rng.complex_gaussian();
    b.set_block(x, std::move(m));
  }
  return b;
}

// blockdiag(b) for a given support and multiplicity layout: per supported
// point, mult consecutive copies of the point's block.
ComplexMatrix block_diagonal(const IndexSet& is,
                             const std::vector<std::size_t>& support,
                             const std::vector<std::size_t>& mults,
                             std::size_t carrier_dim,
                             const AlgebraElement& b) {
  ComplexMatrix out(carrier_dim, carrier_dim);
  std::size_t off = 0;
  for (std::size_t t = 0; t < support.size(); ++t) {
    const std::size_t n = is.dim(support[t]);
    const ComplexMatrix& blk = b.block(support[t]);
    for (std::size_t c = 0; c < mults[t]; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out(off + i, off + j) = blk(i, j);
        }
      }
      off += n;
    }
  }
  return out;
}

}  // namespace

Representation::Representation(
    IndexSet index_set, std::size_t carrier_dim,
    std::vector<std::vector<ComplexMatrix>> images_per_point)
    : index_set_(std::move(index_set)),
      carrier_dim_(carrier_dim),
      images_(std::move(images_per_point)) {
  if (carrier_dim_ == 0) {
    throw DomainError(errc::invalid_input,
                      "carrier dimension must be positive");
  }
  if (images_.size() != index_set_.points()) {
    throw DomainError(errc::invalid_input,
                      "images required for every point of the index set");
  }
  for (std::size_t x = 0; x < images_.size(); ++x) {
    const std::size_t n = index_set_.dim(x);
    if (images_[x].size() != n * n) {
      throw DomainError(errc::invalid_input,
                        "point needs one image per matrix unit");
    }
    for (const ComplexMatrix& m : images_[x]) {
      if (m.rows() != carrier_dim_ || m.cols() != carrier_dim_) {
        throw DomainError(errc::invalid_input,
                          "image size does not match the carrier dimension");
      }
      m.require_finite();
    }
  }
}

const ComplexMatrix& Representation::image(std::size_t x, std::size_t i,
                                           std::size_t j) const {
  if (x >= images_.size()) {
    throw DomainError(errc::invalid_input, "point index outside universe");
  }
  const std::size_t n = index_set_.dim(x);
  if (i < 1 || i > n || j < 1 || j > n) {
    throw DomainError(errc::invalid_input, "matrix unit index out of range");
  }
  return images_[x][(i - 1) * n + (j - 1)];
}

const ComplexMatrix& Representation::image(const std::string& label,
                                           std::size_t i,
                                           std::size_t j) const {
  return image(index_set_.universe().index_of(label), i, j);
}

ValidationReport validate_representation(const Representation& r,
                                         double tol) {
  const IndexSet& is = r.index_set();
  const std::size_t m = r.carrier_dim();
  ValidationReport report;

  auto consider = [&report](double violation, const std::string& name) {
    if (violation > report.worst_violation) {
      report.worst_violation = violation;
      report.worst_relation = name;
    }
  };

  // Product relations: units of the same point compose by index matching,
  // units of distinct points annihilate each other.
  for (std::size_t x = 0; x < is.points(); ++x) {
    const std::size_t nx = is.dim(x);
    const std::string& lx = is.universe().label(x);
    for (std::size_t y = 0; y < is.points(); ++y) {
      const std::size_t ny = is.dim(y);
      const std::string& ly = is.universe().label(y);
      for (std::size_t i = 1; i <= nx; ++i) {
        for (std::size_t j = 1; j <= nx; ++j) {
          const ComplexMatrix& left = r.image(x, i, j);
          const double lscale = frobenius_norm(left);
          for (std::size_t k = 1; k <= ny; ++k) {
            for (std::size_t l = 1; l <= ny; ++l) {
              const ComplexMatrix& right = r.image(y, k, l);
              ComplexMatrix prod = gemm(left, right);
              if (x == y && j == k) {
                accumulate_scaled(prod, -1.0, r.image(x, i, l));
              }
              const double defect = frobenius_norm(prod);
              const double scale = 1.0 + lscale * frobenius_norm(right);
              consider(defect / scale, relation_name(lx, i, j, ly, k, l));
            }
          }
        }
      }
    }
  }

  // Unitality: the diagonal units of all points must sum to the identity.
  ComplexMatrix unit_sum(m, m);
  for (std::size_t x = 0; x < is.points(); ++x) {
    for (std::size_t i = 1; i <= is.dim(x); ++i) {
      accumulate_scaled(unit_sum, 1.0, r.image(x, i, i));
    }
  }
  accumulate_scaled(unit_sum, -1.0, ComplexMatrix::identity(m));
  const double unit_defect =
      frobenius_norm(unit_sum) / (1.0 + std::sqrt(static_cast<double>(m)));
  consider(unit_defect, "sum of diagonal unit images minus identity");

  if (report.worst_violation > tol) {
    throw DomainError(errc::not_a_representation,
                      "generator relation violated: " + report.worst_relation +
                          " (scaled defect " +
                          std::to_string(report.worst_violation) + ")");
  }
  return report;
}

ComplexMatrix evaluate(const Representation& r, const AlgebraElement& b) {
  if (!(r.index_set() == b.index_set())) {
    throw DomainError(errc::invalid_input,
                      "element lives over a different index set");
  }
  const std::size_t m = r.carrier_dim();
  ComplexMatrix acc(m, m);
  for (std::size_t x = 0; x < r.index_set().points(); ++x) {
    const std::size_t n = r.index_set().dim(x);
    const ComplexMatrix& blk = b.block(x);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const Complex coeff = blk(i - 1, j - 1);
        if (coeff == Complex(0.0)) continue;
        accumulate_scaled(acc, coeff, r.image(x, i, j));
      }
    }
  }
  return acc;
}

ComplexMatrix projector_at(const Representation& r, std::size_t x) {
  if (x >= r.index_set().points()) {
    throw DomainError(errc::invalid_input, "point index outside universe");
  }
  const std::size_t m = r.carrier_dim();
  ComplexMatrix p(m, m);
  for (std::size_t i = 1; i <= r.index_set().dim(x); ++i) {
    accumulate_scaled(p, 1.0, r.image(x, i, i));
  }
  return p;
}

ComplexMatrix projector_at(const Representation& r, const std::string& label) {
  return projector_at(r, r.index_set().universe().index_of(label));
}

std::vector<std::size_t> support(const Representation& r, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < r.index_set().points(); ++x) {
    if (linalg::spectral_norm(projector_at(r, x)) > tol) out.push_back(x);
  }
  return out;
}

std::size_t commutant_dimension(const Representation& r, double tol) {
  const std::size_t m = r.carrier_dim();

  // Nonzero generator images; exactly-zero ones contribute empty equations.
  std::vector<const ComplexMatrix*> gens;
  for (std::size_t x = 0; x < r.index_set().points(); ++x) {
    const std::size_t n = r.index_set().dim(x);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const ComplexMatrix& g = r.image(x, i, j);
        if (!exactly_zero(g)) gens.push_back(&g);
      }
    }
  }
  if (gens.empty()) {
    // Cannot happen for a validated representation (unitality), but the
    // commutant of the zero list is everything.
    return m * m;
  }

  // One block row per generator G: the equation T G - G T = 0 on the
  // column-major vectorization t of T, i.e. (G^T (x) I - I (x) G) t = 0.
  ComplexMatrix stack(gens.size() * m * m, m * m);
  double gen_scale = 0.0;
  std::size_t base = 0;
  for (const ComplexMatrix* gp : gens) {
    const ComplexMatrix& g = *gp;
    gen_scale = std::max(gen_scale, kernels::frobenius_norm(g));
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t r_ = 0; r_ < m; ++r_) {
        const std::size_t row = base + r_ + m * s;
        for (std::size_t k = 0; k < m; ++k) {
          stack(row, r_ + m * k) += g(k, s);
          stack(row, k + m * s) -= g(r_, k);
        }
      }
    }
    base += m * m;
  }
  // The generator norms set the scale: when every commutator is zero the
  // stack is pure roundoff and must read as rank zero, not as noise rank.
  return m * m - linalg::rank(stack, tol, gen_scale);
}

bool is_irreducible(const Representation& r, double tol) {
  return commutant_dimension(r, tol) == 1;
}

DecompositionResult decompose(const Representation& r, double tol) {
  const IndexSet& is = r.index_set();
  const std::size_t m = r.carrier_dim();

  DecompositionResult result;
  result.support = support(r, tol);
  if (result.support.empty()) {
    throw DomainError(errc::decomposition_failure,
                      "no factor acts nonzero; input cannot be unital");
  }

  // Basis of each multiplicity space: the range of the image of the first
  // diagonal unit of the factor.
  std::vector<ComplexMatrix> range_bases;
  std::size_t total = 0;
  for (std::size_t y : result.support) {
    const ComplexMatrix& p1 = r.image(y, 1, 1);
    ComplexMatrix basis = linalg::range_basis(p1, tol);
    const std::size_t mult = basis.cols();
    result.multiplicities.push_back(mult);
    total += mult * is.dim(y);
    range_bases.push_back(std::move(basis));
  }
  if (total != m) {
    throw DomainError(
        errc::decomposition_failure,
        "multiplicity ranks are inconsistent with the carrier dimension (" +
            std::to_string(total) + " vs " + std::to_string(m) + ")");
  }

  // Intertwiner columns pi(e(y,i,1)) v_k, laid out per supported point, per
  // basis vector, per row index of the factor.
  ComplexMatrix s(m, m);
  std::size_t col = 0;
  for (std::size_t t = 0; t < result.support.size(); ++t) {
    const std::size_t y = result.support[t];
    const std::size_t n = is.dim(y);
    const ComplexMatrix& basis = range_bases[t];
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      for (std::size_t i = 1; i <= n; ++i) {
        const ComplexMatrix& gi = r.image(y, i, 1);
        for (std::size_t row = 0; row < m; ++row) {
          Complex sum = 0.0;
          for (std::size_t q = 0; q < m; ++q) sum += gi(row, q) * basis(q, k);
          s(row, col) = sum;
        }
        ++col;
      }
    }
  }

  ComplexMatrix s_inv(m, m);
  try {
    s_inv = linalg::inverse(s, tol);
  } catch (const DomainError&) {
    throw DomainError(errc::decomposition_failure,
                      "assembled intertwiner is numerically singular");
  }
  result.intertwiner = s;
  result.condition_number = linalg::cond2(s);

  // Verify the conjugation identity on every generator and on random probes.
  std::vector<AlgebraElement> probes = generator_elements(is);
  Rng rng(0x9d2c5680u);
  for (int t = 0; t < 20; ++t) probes.push_back(random_element(rng, is));

  double residual = 0.0;
  for (const AlgebraElement& b : probes) {
    const ComplexMatrix lhs = gemm(s_inv, gemm(evaluate(r, b), s));
    const ComplexMatrix target = block_diagonal(
        is, result.support, result.multiplicities, m, b);
    const double defect =
        frobenius_norm(weighted_sum(1.0, lhs, -1.0, target));
    residual = std::max(residual, defect / (1.0 + algebra::norm(b)));
  }
  result.residual = residual;

  const double limit = tol * (1.0 + result.condition_number);
  if (residual > limit) {
    throw DomainError(errc::decomposition_failure,
                      "conjugated images deviate from block-diagonal form "
                      "(residual " +
                          std::to_string(residual) + ", limit " +
                          std::to_string(limit) + ")");
  }
  return result;
}

Filter extract_filter(const Representation& r, double tol) {
  if (!is_irreducible(r, tol)) {
    throw DomainError(errc::precondition,
                      "filter extraction requires an irreducible "
                      "representation");
  }
  const std::size_t npts = r.index_set().points();
  const ComplexMatrix id = ComplexMatrix::identity(r.carrier_dim());

  std::vector<std::size_t> hits;
  for (std::size_t x = 0; x < npts; ++x) {
    const ComplexMatrix p = projector_at(r, x);
    if (linalg::spectral_norm(weighted_sum(1.0, p, -1.0, id)) <= tol) {
      hits.push_back(x);
    }
  }
  if (hits.size() != 1) {
    throw DomainError(errc::internal_consistency,
                      "expected exactly one point with identity projector, "
                      "found " +
                          std::to_string(hits.size()));
  }
  const std::size_t y = hits.front();

  if (npts <= 10) {
    // Exhaustive semantics check: the indicator image is the identity
    // exactly on the sets containing y.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << npts); ++bits) {
      const Subset u(bits, npts);
      const ComplexMatrix pu =
          evaluate(r, algebra::indicator(r.index_set(), u));
      const bool is_identity =
          linalg::spectral_norm(weighted_sum(1.0, pu, -1.0, id)) <= tol;
      if (is_identity != u.contains(y)) {
        throw DomainError(errc::internal_consistency,
                          "indicator image disagrees with the extracted "
                          "point on a subset");
      }
    }
  }
  return Filter(r.index_set().universe(),
                Subset::single(npts, y));
}

Representation point_evaluation(const IndexSet& index_set, std::size_t x) {
  if (x >= index_set.points()) {
    throw DomainError(errc::invalid_input, "point index outside universe");
  }
  const std::size_t n = index_set.dim(x);
  std::vector<std::vector<ComplexMatrix>> images;
  for (std::size_t p = 0; p < index_set.points(); ++p) {
    const std::size_t np = index_set.dim(p);
    std::vector<ComplexMatrix> pt;
    for (std::size_t i = 1; i <= np; ++i) {
      for (std::size_t j = 1; j <= np; ++j) {
        pt.push_back(p == x ? matrix_unit(n, i, j) : ComplexMatrix(n, n));
      }
    }
    images.push_back(std::move(pt));
  }
  return Representation(index_set, n, std::move(images));
}

Representation build_from_filter(
    const Filter& f, const IndexSet& index_set,
    const std::map<std::string, ComplexMatrix>* bases) {
  if (!(f.universe() == index_set.universe())) {
    throw DomainError(errc::invalid_input,
                      "filter universe differs from the index set's");
  }
  // Selecting the constant-dimension block doubles as the ultrafilter
  // precondition check and fixes the carrier size.
  const filters::Partition dims = index_set.dimension_partition();
  const std::size_t block = filters::partition_select(f, dims);
  const std::size_t y = f.kernel().indices().front();
  const std::size_t n = index_set.dim(y);
  if (!dims.blocks()[block].contains(y)) {
    throw DomainError(errc::internal_consistency,
                      "dimension block does not contain the kernel point");
  }

  Representation plain = point_evaluation(index_set, y);
  if (bases == nullptr) return plain;
  const auto it = bases->find(index_set.universe().label(y));
  if (it == bases->end()) return plain;

  const ComplexMatrix& b = it->second;
  if (b.rows() != n || b.cols() != n) {
    throw DomainError(errc::invalid_input,
                      "basis size does not match the factor dimension");
  }
  const ComplexMatrix b_inv = linalg::inverse(b, kDefaultTol);

  std::vector<std::vector<ComplexMatrix>> images;
  for (std::size_t p = 0; p < index_set.points(); ++p) {
    const std::size_t np = index_set.dim(p);
    std::vector<ComplexMatrix> pt;
    for (std::size_t i = 1; i <= np; ++i) {
      for (std::size_t j = 1; j <= np; ++j) {
        if (p == y) {
          pt.push_back(gemm(gemm(b, matrix_unit(n, i, j)), b_inv));
        } else {
          pt.push_back(ComplexMatrix(n, n));
        }
      }
    }
    images.push_back(std::move(pt));
  }
  return Representation(index_set, n, std::move(images));
}

EquivalenceCertificate equivalent(const Representation& r1,
                                  const Representation& r2, double tol) {
  if (!(r1.index_set() == r2.index_set())) {
    throw DomainError(errc::invalid_input,
                      "representations live over different index sets");
  }
  EquivalenceCertificate cert;
  if (r1.carrier_dim() != r2.carrier_dim()) return cert;

  const DecompositionResult d1 = decompose(r1, tol);
  const DecompositionResult d2 = decompose(r2, tol);
  if (d1.support != d2.support || d1.multiplicities != d2.multiplicities) {
    return cert;
  }

  // Same block layout on both sides, so S2 S1^-1 carries pi1 to pi2.
  const ComplexMatrix s1_inv = linalg::inverse(d1.intertwiner, tol);
  ComplexMatrix t = gemm(d2.intertwiner, s1_inv);

  double defect = 0.0;
  const double tnorm = frobenius_norm(t);
  const IndexSet& is = r1.index_set();
  for (std::size_t x = 0; x < is.points(); ++x) {
    const std::size_t n = is.dim(x);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const ComplexMatrix& g1 = r1.image(x, i, j);
        const ComplexMatrix& g2 = r2.image(x, i, j);
        const ComplexMatrix diff =
            weighted_sum(1.0, gemm(t, g1), -1.0, gemm(g2, t));
        const double scale = 1.0 + tnorm * (1.0 + frobenius_norm(g1));
        defect = std::max(defect, frobenius_norm(diff) / scale);
      }
    }
  }
  const double limit =
      tol * (1.0 + d1.condition_number + d2.condition_number);
  if (defect > limit) {
    throw DomainError(errc::internal_consistency,
                      "matched decompositions produced an intertwiner that "
                      "fails on the generators (defect " +
                          std::to_string(defect) + ")");
  }
  cert.equivalent = true;
  cert.intertwiner = std::move(t);
  cert.defect = defect;
  return cert;
}

std::vector<Representation> enumerate_irreducibles(const IndexSet& index_set) {
  std::vector<Representation> out;
  out.reserve(index_set.points());
  for (std::size_t x = 0; x < index_set.points(); ++x) {
    out.push_back(point_evaluation(index_set, x));
  }
  return out;
}

InclusionReport inclusion_property_check(const Representation& r,
                                         double tol) {
  const std::size_t npts = r.index_set().points();
  if (npts > 10) {
    throw DomainError(errc::precondition,
                      "exhaustive inclusion check is limited to 10 points");
  }
  std::vector<ComplexMatrix> projectors;
  for (std::size_t x = 0; x < npts; ++x) {
    projectors.push_back(projector_at(r, x));
  }

  const std::uint64_t count = std::uint64_t{1} << npts;
  std::vector<bool> nonzero(count, false);
  const std::size_t m = r.carrier_dim();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    ComplexMatrix pu(m, m);
    for (std::size_t x = 0; x < npts; ++x) {
      if ((bits >> x) & 1u) accumulate_scaled(pu, 1.0, projectors[x]);
    }
    nonzero[bits] = linalg::spectral_norm(pu) > tol;
  }

  // One-point enlargements cover all supersets by induction.
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (!nonzero[bits]) continue;
    for (std::size_t x = 0; x < npts; ++x) {
      const std::uint64_t bigger = bits | (std::uint64_t{1} << x);
      if (!nonzero[bigger]) {
        throw DomainError(errc::internal_consistency,
                          "a set acting nonzero has a superset acting as "
                          "zero; input is not a representation");
      }
    }
  }

  InclusionReport report;
  report.subsets_checked = count;
  report.support_size = support(r, tol).size();
  return report;
}

}  // namespace prodrep::reps

namespace prodrep::algebra {

PositiveSpectrumReport check_positive_spectrum(const AlgebraElement& f,
                                               const reps::Representation& pi,
                                               double tol) {
  const IndexSet& is = f.index_set();
  if (!is.abelian()) {
    throw DomainError(errc::precondition,
                      "positivity check requires all factor dimensions 1");
  }
  if (!(pi.index_set() == is)) {
    throw DomainError(errc::invalid_input,
                      "element and representation index sets differ");
  }
  for (std::size_t x = 0; x < is.points(); ++x) {
    const Complex v = f.block(x)(0, 0);
    if (v.imag() != 0.0 || v.real() < 0.0) {
      throw DomainError(errc::precondition,
                        "element blocks must be real and nonnegative");
    }
  }

  PositiveSpectrumReport report;
  report.eigenvalues = spectrum(reps::evaluate(pi, f));
  report.min_real = report.eigenvalues.empty() ? 0.0
                                               : report.eigenvalues[0].real();
  for (const Complex& ev : report.eigenvalues) {
    report.min_real = std::min(report.min_real, ev.real());
    report.max_abs_imag = std::max(report.max_abs_imag, std::abs(ev.imag()));
  }
  report.ok = report.min_real >= -tol && report.max_abs_imag <= tol;
  return report;
}

}  // namespace prodrep::algebra
