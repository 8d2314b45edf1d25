#pragma once

#include <optional>
#include <string_view>

#include "entmeas/entanglement_matrix.hpp"
#include "entmeas/quantum_state.hpp"

namespace entmeas {

/// Which systems play the pointer role when measuring the pair A, B.
///   kProse:   A is measured onto pointer M, B onto pointer N.
///   kPrinted: roles as in the displayed joint superoperator, where the trace
///             acts on A and B and M, N are sandwiched by the projectors.
enum class Convention { kProse, kPrinted };

const char* to_string(Convention c);
std::optional<Convention> parse_convention(std::string_view name);

struct TransferScenario {
  DensityMatrix joint;      // rho_AB, dims (D_A, D_B)
  EntanglementMatrix r_a;   // D_A x D_A
  EntanglementMatrix r_b;   // D_B x D_B
  DensityMatrix pointer_m;  // D_A
  DensityMatrix pointer_n;  // D_B
  Convention convention = Convention::kProse;
};

struct TransferReport {
  DensityMatrix rho_mn;
  double negativity = 0.0;
  double mutual_information = 0.0;
  bool is_product = false;
  bool is_diagonal = false;
  Convention convention = Convention::kProse;
};

/// Throws DimensionError unless the scenario's dimensions fit together.
void validate_scenario(const TransferScenario& s);

/// Simulates both local measurements on rho_AB (x) rho_M (x) rho_N and returns
/// the reduced pointer state rho_MN with its correlation measures.
TransferReport run_transfer(const TransferScenario& s);

/// Negativity of rho_MN is at most 1e-9 under both conventions.
bool verify_no_go(const TransferScenario& s);

}  // namespace entmeas
