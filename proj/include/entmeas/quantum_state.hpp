#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "entmeas/operator_core.hpp"

namespace entmeas {

/// Hermitian, positive semidefinite, unit-trace operator with subsystem structure.
///
/// Instances only come out of the validating factories, so every
/// DensityMatrix in the program satisfies the invariants.
class DensityMatrix {
 public:
  /// Validates `m` against dims (product must equal the side length).
  static DensityMatrix from_matrix(const ComplexMatrix& m, std::vector<std::size_t> dims);
  static DensityMatrix from_matrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  bool is_bipartite() const noexcept { return dims_.size() == 2; }

  /// Same matrix viewed with a different factorization of the space.
  DensityMatrix with_dims(std::vector<std::size_t> dims) const;

 private:
  DensityMatrix(ComplexMatrix m, std::vector<std::size_t> dims)
      : matrix_(std::move(m)), dims_(std::move(dims)) {}

  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
};

/// Normalized state vector (c_1, ..., c_D).
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }

 private:
  ComplexVector amplitudes_;
};

/// Quantum-classical state: classical pointer label -> positive operator.
class QCState {
 public:
  using Label = int;

  QCState(std::map<Label, ComplexMatrix> operators);

  const std::map<Label, ComplexMatrix>& operators() const noexcept { return operators_; }
  std::size_t dim() const noexcept;
  /// Sum over pointer values of the attached operators.
  ComplexMatrix marginal() const;

 private:
  std::map<Label, ComplexMatrix> operators_;
};

/// Throws ValidationError naming the first violated density-matrix rule.
void validate_density(const ComplexMatrix& m);
/// Hermitian with no eigenvalue below -tol::kValidation.
bool is_positive_semidefinite(const ComplexMatrix& m);

DensityMatrix density_from_matrix(const ComplexMatrix& m, std::vector<std::size_t> dims);
DensityMatrix density_from_pure(const PureState& psi);
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

PureState maximum_uncertainty_state(std::size_t d);
PureState basis_state(std::size_t d, std::size_t k);
/// sum_k |k>|k> / sqrt(d) on a d x d space.
PureState maximally_entangled_state(std::size_t d);
DensityMatrix maximally_mixed(std::size_t d);

/// Schmidt-form purification sum_i sqrt(p_i) |e_i>|i> on input (x) reference.
PureState purify(const DensityMatrix& rho);

QCState qc_state(const std::vector<QCState::Label>& pointer_values,
                 const std::vector<ComplexMatrix>& operators);

}  // namespace entmeas
