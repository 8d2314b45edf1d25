#include "entmeas/entanglement_matrix.hpp"

#include <cmath>
#include <sstream>

#include "entmeas/errors.hpp"
#include "entmeas/quantum_state.hpp"

namespace entmeas {

EntanglementMatrix::EntanglementMatrix(const ComplexMatrix& m) : matrix_(m) {
  require_square(m, "entanglement matrix");
  require_finite(m, "entanglement matrix");
  if (m.rows() == 0) throw DimensionError("entanglement matrix: empty");
  if (!is_hermitian(m)) {
    throw ValidationError(Violation::kNonHermitian, "entanglement matrix: not Hermitian");
  }
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    if (std::abs(m(k, k) - Complex(1.0, 0.0)) > tol::kValidation) {
      std::ostringstream os;
      os << "entanglement matrix: normalization violated, R[" << k << "][" << k
         << "] = " << m(k, k).real();
      throw ValidationError(Violation::kOffUnitDiagonal, os.str());
    }
  }
  if (!is_positive_semidefinite(m)) {
    throw ValidationError(Violation::kNotPositiveSemidefinite,
                          "entanglement matrix: not positive semidefinite");
  }
}

EntanglementMatrix EntanglementMatrix::unchecked(const ComplexMatrix& m) {
  require_square(m, "entanglement matrix");
  return EntanglementMatrix(m, Unchecked{});
}

EntanglementMatrix EntanglementMatrix::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return EntanglementMatrix(ComplexMatrix::Identity(n, n));
}

EntanglementMatrix EntanglementMatrix::ones(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return EntanglementMatrix(ComplexMatrix::Ones(n, n));
}

EntanglementMatrix validate_entanglement_matrix(const ComplexMatrix& m) {
  return EntanglementMatrix(m);
}

EntanglementMatrix qubit_family(Complex q) {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) ||
      std::abs(q) > 1.0 + tol::kValidation) {
    std::ostringstream os;
    os << "qubit_family: |q| = " << std::abs(q) << " exceeds 1";
    throw ValidationError(Violation::kOutOfRange, os.str());
  }
  ComplexMatrix m(2, 2);
  m << 1.0, q, std::conj(q), 1.0;
  return EntanglementMatrix(m);
}

std::vector<double> normalized_spectrum(const EntanglementMatrix& r) {
  const auto eig = eig_hermitian(r.matrix() / double(r.dim()));
  return {eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size()};
}

}  // namespace entmeas
