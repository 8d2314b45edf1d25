#pragma once

#include <cstddef>
#include <vector>

#include "entmeas/operator_core.hpp"

namespace entmeas {

/// Hermitian, positive semidefinite matrix with unit diagonal that weights the
/// coherences an entangling measurement copies onto the pointer.
class EntanglementMatrix {
 public:
  /// Validating constructor; throws ValidationError naming the violated rule.
  explicit EntanglementMatrix(const ComplexMatrix& m);

  /// Skips validation. Only for building deliberately non-physical maps, e.g.
  /// to show that a non-PSD matrix yields a map that is not completely positive.
  static EntanglementMatrix unchecked(const ComplexMatrix& m);

  static EntanglementMatrix identity(std::size_t d);
  static EntanglementMatrix ones(std::size_t d);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  bool validated() const noexcept { return validated_; }

 private:
  struct Unchecked {};
  EntanglementMatrix(const ComplexMatrix& m, Unchecked) : matrix_(m), validated_(false) {}

  ComplexMatrix matrix_;
  bool validated_ = true;
};

EntanglementMatrix validate_entanglement_matrix(const ComplexMatrix& m);

/// [[1, q], [conj(q), 1]], requires |q| <= 1.
EntanglementMatrix qubit_family(Complex q);

/// Eigenvalues of R / D, descending.
std::vector<double> normalized_spectrum(const EntanglementMatrix& r);

}  // namespace entmeas
