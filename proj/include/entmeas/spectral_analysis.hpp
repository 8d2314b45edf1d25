#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "entmeas/measurement_superop.hpp"
#include "entmeas/operator_core.hpp"

namespace entmeas {

/// v with S v != 0 and S (S v) = 0, both as operators on A (x) M.
struct JordanWitness {
  ComplexMatrix vector;
  ComplexMatrix image;
};

struct SpectralReport {
  GeneralSpectrum spectrum;
  std::size_t unit_eigenspace_dim = 0;  // algebraic multiplicity of eigenvalue 1
  std::size_t zero_geometric_dim = 0;
  std::size_t zero_algebraic_dim = 0;
  bool defective = false;
  std::vector<JordanWitness> jordan_chain_witnesses;
};

/// Multiplicities, defectiveness and Jordan-chain witnesses at eigenvalue 0.
/// Requires an endomorphism on a (D, D) space with D <= kMaxExplicitDim.
SpectralReport spectral_report(const Superoperator& s);

/// The twelve qubit operators rho_A (x) P12, rho_A (x) P21 and
/// rho_A (x) (P22 - P11), with rho_A running over the matrix units.
std::vector<ComplexMatrix> qubit_null_forms();

/// True iff `s` annihilates every qubit null form; for q == 0 also requires
/// P12 (x) I and P21 (x) I to be annihilated.
bool verify_qubit_null_forms(const Superoperator& s, Complex q);

/// v = P12 (x) I / 2 together with its image q P12 (x) P12. Throws ValidationError
/// for q == 0 and std::domain_error if `s` does not map v that way.
JordanWitness jordan_witness(const Superoperator& s, Complex q);

/// Sixteen-element qubit basis: the two unit eigenvectors, ten null vectors,
/// the transversal pair P12 (x) P12, P21 (x) P21, then the improper pair
/// P12 (x) I / 2, P21 (x) I / 2.
std::vector<ComplexMatrix> canonical_qubit_basis();

/// Coordinate matrix of `s` in an arbitrary (non-orthogonal) operator basis,
/// solved through the Hilbert-Schmidt Gram system.
ComplexMatrix matrix_in_eigen_basis(const Superoperator& s,
                                    const std::vector<ComplexMatrix>& basis);

}  // namespace entmeas
