#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "entmeas/entanglement_matrix.hpp"
#include "entmeas/operator_core.hpp"
#include "entmeas/quantum_state.hpp"

namespace entmeas {

/// Largest object/pointer dimension for which explicit superoperator matrices
/// are built (matrix side D^4 <= 1296). Larger problems use measure_product.
inline constexpr std::size_t kMaxExplicitDim = 6;

/// Linear map between operator spaces, stored as a matrix acting on
/// column-stacked operators: vec(S(X)) = matrix * vec(X).
class Superoperator {
 public:
  using Map = std::function<ComplexMatrix(const ComplexMatrix&)>;

  Superoperator(ComplexMatrix matrix, std::vector<std::size_t> input_dims,
                std::vector<std::size_t> output_dims);
  /// Endomorphism on a space with the given subsystem dims.
  Superoperator(ComplexMatrix matrix, std::vector<std::size_t> space_dims);

  /// Tabulates `map` on the matrix units |i><j| of the input space.
  static Superoperator from_map(std::vector<std::size_t> input_dims,
                                std::vector<std::size_t> output_dims, const Map& map);
  static Superoperator identity(std::vector<std::size_t> space_dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& input_dims() const noexcept { return input_dims_; }
  const std::vector<std::size_t>& output_dims() const noexcept { return output_dims_; }
  std::size_t input_dim() const noexcept { return input_dim_; }
  std::size_t output_dim() const noexcept { return output_dim_; }

  /// Applies the map to an arbitrary operator on the input space.
  ComplexMatrix operator()(const ComplexMatrix& x) const;

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> input_dims_;
  std::vector<std::size_t> output_dims_;
  std::size_t input_dim_ = 0;
  std::size_t output_dim_ = 0;
};

/// Orthogonal projectors summing to the identity, one per observable value.
class ProjectorPartition {
 public:
  ProjectorPartition(std::vector<ComplexMatrix> projectors, std::vector<double> labels);

  /// Complete rank-1 partition {|k><k|} with labels 0, 1, ..., d-1.
  static ProjectorPartition complete(std::size_t d);
  /// Eigenprojectors of a Hermitian observable, labelled by descending eigenvalue.
  static ProjectorPartition from_observable(const ComplexMatrix& observable);

  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
  const std::vector<double>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return projectors_.size(); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(projectors_.front().rows()); }

 private:
  std::vector<ComplexMatrix> projectors_;
  std::vector<double> labels_;
};

/// rho(mu) -> rho(lambda) = sum_mu P_lambda rho(mu) P_lambda. Output labels are
/// the block indices 0..L-1 of the partition.
QCState classical_pointer_measure(const QCState& state, const ProjectorPartition& partition);

/// X -> sum_lambda (P_lambda Tr_M[X] P_lambda) (x) |lambda><lambda| on A (x) M.
Superoperator standard_measurement(const ProjectorPartition& partition, std::size_t pointer_dim);

/// X -> sum_kl R_kl (P_kk Tr_M[X] P_ll) (x) |k><l| on A (x) M, both of dimension D.
Superoperator entangling_measurement(const EntanglementMatrix& r);

/// Entangling measurement with the all-ones entanglement matrix.
Superoperator duplication_measurement(std::size_t d);

/// Applies `s` to a density matrix and validates the result.
DensityMatrix apply(const Superoperator& s, const DensityMatrix& rho);

/// Closed-form joint state sum_kl R_kl rho_kl |k><l| (x) |k><l|. `pointer` only
/// has its dimension checked: the output does not depend on it.
DensityMatrix measure_product(const EntanglementMatrix& r, const DensityMatrix& object,
                              const DensityMatrix& pointer);

/// Measurement of subsystem A of a joint state on A (x) B; B is traced out.
DensityMatrix measure_joint(const EntanglementMatrix& r, const DensityMatrix& joint,
                            const DensityMatrix& pointer);

/// s1 after s2.
Superoperator compose(const Superoperator& s1, const Superoperator& s2);

/// sum_ij S(|i><j|) (x) |i><j|.
ComplexMatrix choi_matrix(const Superoperator& s);
bool is_completely_positive(const Superoperator& s);

/// Hilbert-Schmidt adjoint of s.
Superoperator adjoint(const Superoperator& s);

struct JointComponent {
  double weight;               // kappa_k
  ComplexVector coefficients;  // e_k, length D
  ComplexVector joint;         // sum_i e_ki |i>|i>, length D^2
};

/// Eigendecomposition of (R_kl c_k conj(c_l)) lifted to the dubbed basis |i>|i>.
std::vector<JointComponent> joint_output_decomposition(const EntanglementMatrix& r,
                                                       const PureState& psi);
/// Same for a mixed object state, using (R_kl rho_kl).
std::vector<JointComponent> joint_output_decomposition(const EntanglementMatrix& r,
                                                       const DensityMatrix& rho);

/// Applies `s` to the listed subsystems of an operator on `dims`, identity elsewhere.
ComplexMatrix apply_to_subsystems(const Superoperator& s, const ComplexMatrix& x,
                                  std::span<const std::size_t> dims,
                                  std::span<const std::size_t> targets);

}  // namespace entmeas
