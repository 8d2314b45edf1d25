#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "entmeas/operator_core.hpp"

namespace entmeas::cli {

/// The input file is malformed: bad JSON, missing fields, wrong types or
/// unknown presets. Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state as written in the file, not yet validated.
struct StateInput {
  std::string source;                     // "pure", "density" or the preset name
  std::optional<ComplexVector> amplitudes;  // set for pure states and pure presets
  ComplexMatrix density;                  // psi psi^dagger for pure inputs
};

struct TransferInput {
  std::size_t dimension_b = 0;
  ComplexMatrix entanglement_matrix_b;
  StateInput joint_state;                 // on D_A * D_B
  std::optional<StateInput> pointer_state_b;
};

/// Parsed scenario file. Values are raw: validation happens in the commands
/// so that `validate` can report every violated condition.
struct ScenarioFile {
  std::size_t dimension = 0;
  ComplexMatrix entanglement_matrix;
  std::optional<StateInput> state;
  std::optional<StateInput> pointer_state;
  std::optional<TransferInput> transfer;
};

/// Complex scalar from [re, im] (a bare number is read as real).
Complex parse_complex(const nlohmann::json& j);
/// Row-major nested array of complex scalars.
ComplexMatrix parse_matrix(const nlohmann::json& j);

/// State description on a space of dimension `dim`; `factor` is the single-system
/// dimension for joint presets such as "bell" (0 when not bipartite).
StateInput parse_state(const nlohmann::json& j, std::size_t dim, std::size_t factor = 0);

ScenarioFile parse_scenario(const nlohmann::json& j);
ScenarioFile parse_scenario_text(const std::string& text);

nlohmann::json complex_to_json(Complex z);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

}  // namespace entmeas::cli
