#pragma once

#include <span>

#include "entmeas/entanglement_matrix.hpp"
#include "entmeas/measurement_superop.hpp"
#include "entmeas/quantum_state.hpp"

namespace entmeas {

/// All entropies are in bits.
struct MetricsReport {
  double entropy_input = 0.0;    // S of the object before measurement
  double entropy_object = 0.0;   // S of the object after measurement
  double entropy_pointer = 0.0;  // S of the pointer after measurement
  double entropy_joint = 0.0;    // S of the joint object-pointer state
  double one_time_E = 0.0;
  double coherent_information_two_time = 0.0;
  double mutual_information = 0.0;
};

/// -sum p log2 p with 0 log 0 = 0; entries below tol::kEntropyClamp count as 0.
double shannon_entropy(std::span<const double> probabilities);
/// Entropy of the spectrum of a Hermitian matrix.
double entropy_of_spectrum(const ComplexMatrix& hermitian);
double von_neumann_entropy(const DensityMatrix& rho);

/// One-time entanglement S[(rho_kk)] - S[(R_kl rho_kl)].
double entanglement_after_measurement(const EntanglementMatrix& r, const DensityMatrix& object);

/// Two-time channel A -> M: rho_A -> Tr_A M(rho_A (x) pointer).
Superoperator two_time_channel(const EntanglementMatrix& r, const DensityMatrix& pointer);

/// S[N(rho)] - S[(N (x) id)(Psi Psi^dagger)] with Psi a purification of rho.
double coherent_information(const Superoperator& channel, const DensityMatrix& rho);

double mutual_information(const DensityMatrix& bipartite);
/// (||rho^{T_2}||_1 - 1) / 2.
double negativity(const DensityMatrix& bipartite);

MetricsReport metrics_report(const EntanglementMatrix& r, const DensityMatrix& object,
                             const DensityMatrix& pointer);

}  // namespace entmeas
