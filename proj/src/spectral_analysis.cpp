#include "entmeas/spectral_analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entmeas/errors.hpp"

namespace entmeas {

namespace {

constexpr double kAnnihilated = 1e-9;

ComplexMatrix op(std::size_t ka, std::size_t la, const ComplexMatrix& pointer) {
  return tensor(matrix_unit(2, ka, la), pointer);
}

void require_qubit_measurement(const Superoperator& s, const char* what) {
  const std::vector<std::size_t> qubit_pair{2, 2};
  if (s.input_dims() != qubit_pair || s.output_dims() != qubit_pair) {
    throw DimensionError(std::string(what) + ": requires a superoperator on a 2 x 2 space");
  }
}

}  // namespace

SpectralReport spectral_report(const Superoperator& s) {
  if (s.input_dims() != s.output_dims() || s.input_dims().size() != 2 ||
      s.input_dims()[0] != s.input_dims()[1]) {
    throw DimensionError("spectral_report: expects a measurement map on a (D, D) space");
  }
  if (s.input_dims()[0] > kMaxExplicitDim) {
    std::ostringstream os;
    os << "spectral_report: dimension " << s.input_dims()[0] << " exceeds the cap "
       << kMaxExplicitDim;
    throw DimensionError(os.str());
  }

  SpectralReport report;
  report.spectrum = eig_general(s.matrix());
  report.defective = report.spectrum.defective;
  if (const auto* one = report.spectrum.find({1.0, 0.0}, tol::kCluster)) {
    report.unit_eigenspace_dim = one->algebraic;
  }
  const auto* zero = report.spectrum.find({0.0, 0.0}, tol::kCluster);
  if (zero == nullptr) return report;
  report.zero_algebraic_dim = zero->algebraic;
  report.zero_geometric_dim = zero->geometric;
  if (zero->geometric == zero->algebraic) return report;

  // Generalized null vectors outside the kernel span the chain starts.
  const ComplexMatrix& m = s.matrix();
  const ComplexMatrix kernel = null_space(m);
  const ComplexMatrix generalized = null_space(m * m);
  const ComplexMatrix complement =
      generalized - kernel * (kernel.adjoint() * generalized);
  Eigen::BDCSVD<ComplexMatrix> svd(complement, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const std::size_t n = s.input_dim();
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    if (sv(j) <= tol::kRank * std::max(1.0, sv(0))) break;
    const ComplexVector v = svd.matrixU().col(j);
    const ComplexVector image = m * v;
    if (image.norm() <= tol::kRank || (m * image).norm() > kAnnihilated) continue;
    report.jordan_chain_witnesses.push_back(
        {devectorize(v, n, n), devectorize(image, n, n)});
  }
  return report;
}

std::vector<ComplexMatrix> qubit_null_forms() {
  const ComplexMatrix p12 = matrix_unit(2, 0, 1);
  const ComplexMatrix p21 = matrix_unit(2, 1, 0);
  const ComplexMatrix diff = matrix_unit(2, 1, 1) - matrix_unit(2, 0, 0);
  std::vector<ComplexMatrix> forms;
  for (const auto* pointer : {&p12, &p21, &diff})
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < 2; ++l) forms.push_back(op(k, l, *pointer));
  return forms;
}

bool verify_qubit_null_forms(const Superoperator& s, Complex q) {
  require_qubit_measurement(s, "verify_qubit_null_forms");
  for (const auto& x : qubit_null_forms()) {
    if (max_abs(s(x)) > kAnnihilated) return false;
  }
  if (std::abs(q) <= tol::kValidation) {
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    if (max_abs(s(op(0, 1, id))) > kAnnihilated) return false;
    if (max_abs(s(op(1, 0, id))) > kAnnihilated) return false;
  }
  return true;
}

JordanWitness jordan_witness(const Superoperator& s, Complex q) {
  require_qubit_measurement(s, "jordan_witness");
  if (std::abs(q) <= tol::kValidation) {
    throw ValidationError(Violation::kOutOfRange,
                          "jordan_witness: q = 0 gives the standard measurement, which has no "
                          "Jordan chain");
  }
  JordanWitness w;
  w.vector = op(0, 1, ComplexMatrix::Identity(2, 2)) / 2.0;
  w.image = s(w.vector);
  const ComplexMatrix expected = q * op(0, 1, matrix_unit(2, 0, 1));
  if (max_abs(w.image - expected) > kAnnihilated || max_abs(s(w.image)) > kAnnihilated) {
    throw std::domain_error(
        "jordan_witness: P12 (x) I / 2 does not start a length-2 chain with image q P12 (x) P12");
  }
  return w;
}

std::vector<ComplexMatrix> canonical_qubit_basis() {
  const ComplexMatrix p11 = matrix_unit(2, 0, 0);
  const ComplexMatrix p12 = matrix_unit(2, 0, 1);
  const ComplexMatrix p21 = matrix_unit(2, 1, 0);
  const ComplexMatrix p22 = matrix_unit(2, 1, 1);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return {
      tensor(p11, p11),       tensor(p22, p22),
      tensor(p11, p12),       tensor(p22, p12),       tensor(p21, p12),
      tensor(p11, p21),       tensor(p22, p21),       tensor(p12, p21),
      tensor(p11, p22 - p11), tensor(p12, p22 - p11), tensor(p21, p22 - p11),
      tensor(p22, p22 - p11),
      tensor(p12, p12),       tensor(p21, p21),
      tensor(p12, id) / 2.0,  tensor(p21, id) / 2.0,
  };
}

ComplexMatrix matrix_in_eigen_basis(const Superoperator& s,
                                    const std::vector<ComplexMatrix>& basis) {
  const auto side = s.matrix().cols();
  if (s.input_dim() != s.output_dim() || static_cast<Eigen::Index>(basis.size()) != side) {
    throw DimensionError("matrix_in_eigen_basis: basis size must equal the operator-space dimension");
  }
  ComplexMatrix b(side, side);
  for (Eigen::Index j = 0; j < side; ++j) {
    const auto& e = basis[static_cast<std::size_t>(j)];
    if (e.rows() != static_cast<Eigen::Index>(s.input_dim()) || e.cols() != e.rows()) {
      throw DimensionError("matrix_in_eigen_basis: basis element has the wrong shape");
    }
    b.col(j) = vectorize(e);
  }
  const ComplexMatrix gram = b.adjoint() * b;
  Eigen::FullPivLU<ComplexMatrix> lu(gram);
  lu.setThreshold(tol::kRank);
  if (!lu.isInvertible()) {
    throw ValidationError(Violation::kSingularBasis, "matrix_in_eigen_basis: singular Gram matrix");
  }
  return lu.solve(b.adjoint() * (s.matrix() * b));
}

}  // namespace entmeas
