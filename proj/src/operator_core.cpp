#include "entmeas/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "entmeas/errors.hpp"

namespace entmeas {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kNonFinite: return "non-finite entry";
    case Violation::kNonHermitian: return "not Hermitian";
    case Violation::kNegativeEigenvalue: return "negative eigenvalue";
    case Violation::kTraceNotOne: return "trace is not 1";
    case Violation::kNotNormalized: return "not normalized";
    case Violation::kOffUnitDiagonal: return "diagonal entry is not 1";
    case Violation::kNotPositiveSemidefinite: return "not positive semidefinite";
    case Violation::kOutOfRange: return "parameter out of range";
    case Violation::kSingularBasis: return "basis is linearly dependent";
  }
  return "unknown violation";
}

const EigenvalueCluster* GeneralSpectrum::find(Complex target, double tolerance) const {
  for (const auto& c : eigenvalues) {
    if (std::abs(c.value - target) <= tolerance) return &c;
  }
  return nullptr;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ValidationError(Violation::kNonFinite, std::string(what) + ": non-finite entry");
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tolerance;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_first, std::size_t d_second,
                            Keep keep) {
  const auto n = static_cast<Eigen::Index>(d_first * d_second);
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "partial_trace: matrix " << m.rows() << "x" << m.cols()
       << " does not match dims (" << d_first << ", " << d_second << ")";
    throw DimensionError(os.str());
  }
  const auto d1 = static_cast<Eigen::Index>(d_first);
  const auto d2 = static_cast<Eigen::Index>(d_second);
  if (keep == Keep::kFirst) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        out(i, j) = m.block(i * d2, j * d2, d2, d2).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index a = 0; a < d1; ++a) out += m.block(a * d2, a * d2, d2, d2);
  return out;
}

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

void require_operator_on(const ComplexMatrix& m, std::span<const std::size_t> dims,
                         const char* what) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << what << ": matrix " << m.rows() << "x" << m.cols()
       << " does not match subsystem dimension product " << n;
    throw DimensionError(os.str());
  }
}

}  // namespace

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> perm) {
  require_operator_on(m, dims, "permute_subsystems");
  const std::size_t k = dims.size();
  if (perm.size() != k) throw DimensionError("permute_subsystems: permutation length mismatch");
  std::vector<bool> seen(k, false);
  for (auto p : perm) {
    if (p >= k || seen[p]) throw DimensionError("permute_subsystems: not a permutation");
    seen[p] = true;
  }

  std::vector<std::size_t> out_dims(k);
  for (std::size_t i = 0; i < k; ++i) out_dims[i] = dims[perm[i]];
  const auto in_strides = strides_of(dims);
  const auto out_strides = strides_of(out_dims);
  const std::size_t n = product(dims);

  // map[in_index] = out_index
  std::vector<Eigen::Index> map(n);
  std::vector<std::size_t> digits(k);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t s = 0; s < k; ++s) {
      digits[s] = rest / in_strides[s];
      rest %= in_strides[s];
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < k; ++i) out += digits[perm[i]] * out_strides[i];
    map[idx] = static_cast<Eigen::Index>(out);
  }

  ComplexMatrix result(m.rows(), m.cols());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      result(map[i], map[j]) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return result;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_operator_on(m, dims, "partial_trace");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      (!kept.empty() && kept.back() >= dims.size())) {
    throw DimensionError("partial_trace: invalid subsystem selection");
  }
  std::vector<std::size_t> perm = kept;
  std::size_t d_keep = 1;
  std::size_t d_drop = 1;
  for (auto s : kept) d_keep *= dims[s];
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) {
      perm.push_back(s);
      d_drop *= dims[s];
    }
  }
  return partial_trace(permute_subsystems(m, dims, perm), d_keep, d_drop, Keep::kFirst);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t d_first,
                                std::size_t d_second) {
  const auto d1 = static_cast<Eigen::Index>(d_first);
  const auto d2 = static_cast<Eigen::Index>(d_second);
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2) {
    throw DimensionError("partial_transpose: matrix does not match dims");
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index a = 0; a < d1; ++a)
    for (Eigen::Index b = 0; b < d1; ++b)
      out.block(a * d2, b * d2, d2, d2) = m.block(a * d2, b * d2, d2, d2).transpose();
  return out;
}

namespace {

void fix_phase(Eigen::Ref<ComplexVector> v) {
  // first component of largest modulus becomes real positive
  Eigen::Index pivot = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best + tol::kCluster) {
      best = a;
      pivot = i;
    }
  }
  if (best > 0.0) v *= std::conj(v(pivot)) / std::abs(v(pivot));
}

bool lexicographically_greater(const ComplexVector& a, const ComplexVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i).real() - b(i).real()) > tol::kCluster) return a(i).real() > b(i).real();
    if (std::abs(a(i).imag() - b(i).imag()) > tol::kCluster) return a(i).imag() > b(i).imag();
  }
  return false;
}

}  // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "eig_hermitian");
  require_finite(m, "eig_hermitian");
  if (!is_hermitian(m)) {
    throw ValidationError(Violation::kNonHermitian, "eig_hermitian: input is not Hermitian");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const Eigen::Index n = h.rows();

  HermitianEigen out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index j = 0; j < n; ++j) fix_phase(out.eigenvectors.col(j));

  // order vectors inside each degenerate cluster
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && out.eigenvalues(end - 1) - out.eigenvalues(end) <= tol::kCluster) ++end;
    if (end - start > 1) {
      std::vector<ComplexVector> cols;
      for (Eigen::Index j = start; j < end; ++j) cols.emplace_back(out.eigenvectors.col(j));
      std::stable_sort(cols.begin(), cols.end(), lexicographically_greater);
      for (Eigen::Index j = start; j < end; ++j) out.eigenvectors.col(j) = cols[j - start];
    }
    start = end;
  }
  return out;
}

std::size_t numerical_rank(const ComplexMatrix& m, double relative) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > relative * s(0)) ++rank;
  return rank;
}

ComplexMatrix null_space(const ComplexMatrix& m, double relative) {
  Eigen::BDCSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  if (s.size() > 0 && s(0) > 0.0) {
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > relative * s(0)) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

GeneralSpectrum eig_general(const ComplexMatrix& m) {
  require_square(m, "eig_general");
  require_finite(m, "eig_general");
  const Eigen::Index n = m.rows();
  GeneralSpectrum out;
  if (n == 0) return out;

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
  std::vector<Complex> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  // single-linkage clustering
  std::vector<std::size_t> label(values.size());
  std::iota(label.begin(), label.end(), 0);
  auto root = [&](std::size_t i) {
    while (label[i] != i) i = label[i] = label[label[i]];
    return i;
  };
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= tol::kCluster) label[root(j)] = root(i);

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (root(i) == i) roots.push_back(i);
  }
  for (auto r : roots) {
    EigenvalueCluster c;
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (root(i) == r) {
        sum += values[i];
        ++c.algebraic;
      }
    }
    c.value = sum / static_cast<double>(c.algebraic);
    const ComplexMatrix shifted = m - c.value * ComplexMatrix::Identity(n, n);
    const std::size_t nullity = static_cast<std::size_t>(n) - numerical_rank(shifted);
    // a numerically larger nullity than the cluster size means the cluster split
    c.geometric = std::min(std::max<std::size_t>(nullity, 1), c.algebraic);
    out.defective = out.defective || c.geometric < c.algebraic;
    out.eigenvalues.push_back(c);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const EigenvalueCluster& a, const EigenvalueCluster& b) {
              if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
              return a.value.imag() > b.value.imag();
            });
  return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  return (a.adjoint() * b).trace();
}

ComplexMatrix matrix_unit(std::size_t d, std::size_t k, std::size_t l) {
  if (k >= d || l >= d) throw DimensionError("matrix_unit: index out of range");
  ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  p(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = 1.0;
  return p;
}

ComplexVector vectorize(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix devectorize(const ComplexVector& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) {
    throw DimensionError("devectorize: length does not match shape");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), static_cast<Eigen::Index>(rows),
                                         static_cast<Eigen::Index>(cols));
}

}  // namespace entmeas
