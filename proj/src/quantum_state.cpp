#include "entmeas/quantum_state.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "entmeas/errors.hpp"

namespace entmeas {

namespace {

double min_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().size() == 0 ? 0.0 : solver.eigenvalues()(0);
}

void validate_positive_operator(const ComplexMatrix& m, const char* what) {
  require_square(m, what);
  require_finite(m, what);
  if (!is_hermitian(m)) {
    throw ValidationError(Violation::kNonHermitian, std::string(what) + ": not Hermitian");
  }
  const double lo = min_eigenvalue(m);
  if (lo < -tol::kValidation) {
    std::ostringstream os;
    os << what << ": negative eigenvalue " << lo;
    throw ValidationError(Violation::kNegativeEigenvalue, os.str());
  }
}

}  // namespace

void validate_density(const ComplexMatrix& m) {
  validate_positive_operator(m, "density matrix");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol::kValidation) {
    std::ostringstream os;
    os << "density matrix: trace " << tr << " differs from 1";
    throw ValidationError(Violation::kTraceNotOne, os.str());
  }
}

bool is_positive_semidefinite(const ComplexMatrix& m) {
  return m.rows() == m.cols() && m.allFinite() && is_hermitian(m) &&
         min_eigenvalue(m) >= -tol::kValidation;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, std::vector<std::size_t> dims) {
  validate_density(m);
  const std::size_t n =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (dims.empty() || n != static_cast<std::size_t>(m.rows())) {
    std::ostringstream os;
    os << "density matrix: subsystem dims multiply to " << n << " but side is " << m.rows();
    throw DimensionError(os.str());
  }
  return DensityMatrix(m, std::move(dims));
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  return from_matrix(m, {static_cast<std::size_t>(m.rows())});
}

DensityMatrix DensityMatrix::with_dims(std::vector<std::size_t> dims) const {
  const std::size_t n =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (dims.empty() || n != dim()) throw DimensionError("with_dims: dims do not match");
  return DensityMatrix(matrix_, std::move(dims));
}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DimensionError("pure state: empty amplitude vector");
  if (!amplitudes_.allFinite()) {
    throw ValidationError(Violation::kNonFinite, "pure state: non-finite amplitude");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kValidation) {
    std::ostringstream os;
    os << "pure state: squared norm " << norm2 << " differs from 1";
    throw ValidationError(Violation::kNotNormalized, os.str());
  }
}

QCState::QCState(std::map<Label, ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw DimensionError("qc state: no pointer values");
  const auto d = operators_.begin()->second.rows();
  double total = 0.0;
  for (const auto& [label, op] : operators_) {
    if (op.rows() != d || op.cols() != d) {
      throw DimensionError("qc state: operators have different dimensions");
    }
    validate_positive_operator(op, "qc state operator");
    total += op.trace().real();
  }
  if (std::abs(total - 1.0) > tol::kValidation) {
    std::ostringstream os;
    os << "qc state: total trace " << total << " differs from 1";
    throw ValidationError(Violation::kTraceNotOne, os.str());
  }
}

std::size_t QCState::dim() const noexcept {
  return static_cast<std::size_t>(operators_.begin()->second.rows());
}

ComplexMatrix QCState::marginal() const {
  ComplexMatrix sum = ComplexMatrix::Zero(operators_.begin()->second.rows(),
                                          operators_.begin()->second.cols());
  for (const auto& [label, op] : operators_) sum += op;
  return sum;
}

DensityMatrix density_from_matrix(const ComplexMatrix& m, std::vector<std::size_t> dims) {
  return DensityMatrix::from_matrix(m, std::move(dims));
}

DensityMatrix density_from_pure(const PureState& psi) {
  const ComplexMatrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix::from_matrix(rho);
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::from_matrix(tensor(a.matrix(), b.matrix()), std::move(dims));
}

PureState maximum_uncertainty_state(std::size_t d) {
  if (d == 0) throw DimensionError("maximum_uncertainty_state: dimension must be >= 1");
  const auto n = static_cast<Eigen::Index>(d);
  return PureState(ComplexVector::Constant(n, Complex(1.0 / std::sqrt(double(d)), 0.0)));
}

PureState basis_state(std::size_t d, std::size_t k) {
  if (k >= d) throw DimensionError("basis_state: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(k)) = 1.0;
  return PureState(std::move(v));
}

PureState maximally_entangled_state(std::size_t d) {
  if (d == 0) throw DimensionError("maximally_entangled_state: dimension must be >= 1");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexVector v = ComplexVector::Zero(n * n);
  for (Eigen::Index k = 0; k < n; ++k) v(k * n + k) = 1.0 / std::sqrt(double(d));
  return PureState(std::move(v));
}

DensityMatrix maximally_mixed(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return DensityMatrix::from_matrix(ComplexMatrix::Identity(n, n) / double(d));
}

PureState purify(const DensityMatrix& rho) {
  if (rho.dims().size() != 1) {
    throw DimensionError("purify: expects a single-subsystem density matrix");
  }
  const auto eig = eig_hermitian(rho.matrix());
  const Eigen::Index d = rho.matrix().rows();
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double p = std::max(eig.eigenvalues(i), 0.0);
    // |e_i> (x) |i>: component (a, i) sits at a * d + i
    for (Eigen::Index a = 0; a < d; ++a) psi(a * d + i) += std::sqrt(p) * eig.eigenvectors(a, i);
  }
  psi.normalize();
  return PureState(std::move(psi));
}

QCState qc_state(const std::vector<QCState::Label>& pointer_values,
                 const std::vector<ComplexMatrix>& operators) {
  if (pointer_values.size() != operators.size()) {
    throw DimensionError("qc_state: label and operator counts differ");
  }
  std::map<QCState::Label, ComplexMatrix> ops;
  for (std::size_t i = 0; i < pointer_values.size(); ++i) {
    if (!ops.emplace(pointer_values[i], operators[i]).second) {
      throw DimensionError("qc_state: duplicate pointer value");
    }
  }
  return QCState(std::move(ops));
}

}  // namespace entmeas
