#include "entmeas/commands.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "entmeas/errors.hpp"
#include "entmeas/info_metrics.hpp"
#include "entmeas/measurement_superop.hpp"
#include "entmeas/quantum_state.hpp"
#include "entmeas/spectral_analysis.hpp"

namespace entmeas::cli {

using nlohmann::json;

namespace {

constexpr double kIdentityTolerance = 1e-9;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

double clean(double x) { return std::abs(x) < 1e-15 ? 0.0 : x; }

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

// --- building validated objects from the raw file --------------------------------

EntanglementMatrix entanglement_of(const ComplexMatrix& raw, std::size_t dim, const char* what) {
  if (raw.rows() != idx(dim) || raw.cols() != idx(dim)) {
    std::ostringstream os;
    os << what << " is " << raw.rows() << "x" << raw.cols() << ", expected " << dim << "x"
       << dim;
    throw DimensionError(os.str());
  }
  return EntanglementMatrix(raw);
}

DensityMatrix density_of(const StateInput& in, std::size_t dim, std::vector<std::size_t> dims) {
  if (in.amplitudes) static_cast<void>(PureState(*in.amplitudes));
  if (in.density.rows() != idx(dim) || in.density.cols() != idx(dim)) {
    std::ostringstream os;
    os << "state is " << in.density.rows() << "x" << in.density.cols() << ", expected side "
       << dim;
    throw DimensionError(os.str());
  }
  return DensityMatrix::from_matrix(in.density, std::move(dims));
}

const StateInput& require_state(const ScenarioFile& s) {
  if (!s.state) throw ParseError("missing field \"state\"");
  return *s.state;
}

DensityMatrix pointer_of(const std::optional<StateInput>& in, std::size_t dim) {
  if (!in) return density_from_pure(basis_state(dim, 0));
  return density_of(*in, dim, {dim});
}

// --- per-condition validation -------------------------------------------------

struct Checker {
  json checks = json::object();
  json violations = json::array();

  void record(const std::string& name, bool ok, const std::string& message) {
    checks[name] = ok;
    if (!ok) violations.push_back(name + ": " + message);
  }
};

void check_entanglement(Checker& c, const std::string& prefix, const ComplexMatrix& r,
                        std::size_t dim) {
  const bool shape = r.rows() == idx(dim) && r.cols() == idx(dim);
  c.record(prefix + ".dimension", shape, "expected a " + std::to_string(dim) + "x" +
                                              std::to_string(dim) + " matrix");
  if (r.rows() != r.cols() || !r.allFinite()) return;
  const bool hermitian = is_hermitian(r);
  c.record(prefix + ".hermitian", hermitian, to_string(Violation::kNonHermitian));
  bool unit = true;
  for (Eigen::Index k = 0; k < r.rows(); ++k)
    unit = unit && std::abs(r(k, k) - Complex(1.0, 0.0)) <= tol::kValidation;
  c.record(prefix + ".normalization", unit,
           std::string("normalization violated, ") + to_string(Violation::kOffUnitDiagonal));
  if (hermitian) {
    c.record(prefix + ".positive_semidefinite", is_positive_semidefinite(r),
             to_string(Violation::kNotPositiveSemidefinite));
  }
}

void check_state(Checker& c, const std::string& prefix, const StateInput& s, std::size_t dim) {
  if (s.amplitudes) {
    c.record(prefix + ".normalized",
             std::abs(s.amplitudes->squaredNorm() - 1.0) <= tol::kValidation,
             to_string(Violation::kNotNormalized));
  }
  const ComplexMatrix& m = s.density;
  c.record(prefix + ".dimension", m.rows() == idx(dim) && m.cols() == idx(dim),
           "expected side " + std::to_string(dim));
  if (m.rows() != m.cols() || !m.allFinite()) return;
  const bool hermitian = is_hermitian(m);
  c.record(prefix + ".hermitian", hermitian, to_string(Violation::kNonHermitian));
  if (hermitian) {
    c.record(prefix + ".positive_semidefinite", is_positive_semidefinite(m),
             to_string(Violation::kNegativeEigenvalue));
  }
  c.record(prefix + ".unit_trace", std::abs(m.trace().real() - 1.0) <= tol::kValidation &&
                                       std::abs(m.trace().imag()) <= tol::kValidation,
           to_string(Violation::kTraceNotOne));
}

void cmd_validate(const ScenarioFile& s, json& report, int& exit_code) {
  Checker c;
  check_entanglement(c, "entanglement_matrix", s.entanglement_matrix, s.dimension);
  if (s.state) check_state(c, "state", *s.state, s.dimension);
  if (s.pointer_state) check_state(c, "pointer_state", *s.pointer_state, s.dimension);
  if (s.transfer) {
    const auto& t = *s.transfer;
    check_entanglement(c, "transfer.entanglement_matrix_b", t.entanglement_matrix_b,
                       t.dimension_b);
    check_state(c, "transfer.joint_state", t.joint_state, s.dimension * t.dimension_b);
    if (t.pointer_state_b) {
      check_state(c, "transfer.pointer_state_b", *t.pointer_state_b, t.dimension_b);
    }
  }
  const bool ok = c.violations.empty();
  report["checks"] = std::move(c.checks);
  report["violations"] = std::move(c.violations);
  report["results"] = {{"valid", ok}};
  exit_code = ok ? kExitOk : kExitDomain;
}

// --- analysis commands ----------------------------------------------------------

void cmd_measure(const ScenarioFile& s, json& report) {
  const std::size_t d = s.dimension;
  const auto r = entanglement_of(s.entanglement_matrix, d, "entanglement_matrix");
  const auto object = density_of(require_state(s), d, {d});
  const auto pointer = pointer_of(s.pointer_state, d);
  const auto joint = measure_product(r, object, pointer);

  json decomposition = json::array();
  for (const auto& comp : joint_output_decomposition(r, object)) {
    decomposition.push_back(
        {{"kappa", clean(comp.weight)}, {"coefficients", vector_to_json(comp.coefficients)}});
  }

  const double s_joint = von_neumann_entropy(joint);
  const double s_pointer = entropy_of_spectrum(partial_trace(joint.matrix(), d, d, Keep::kSecond));
  const double e = entanglement_after_measurement(r, object);
  report["results"] = {
      {"one_time_E", clean(e)},
      {"entropy_input", clean(von_neumann_entropy(object))},
      {"entropy_pointer", clean(s_pointer)},
      {"entropy_joint", clean(s_joint)},
      {"mutual_information", clean(mutual_information(joint))},
      {"negativity", clean(negativity(joint))},
  };
  report["decomposition"] = std::move(decomposition);
  report["matrices"] = {{"rho_AM", matrix_to_json(joint.matrix())}};

  json checks = {
      {"output_is_pure", s_joint <= kIdentityTolerance},
      {"E_matches_state_entropies", std::abs(e - (s_pointer - s_joint)) <= kIdentityTolerance},
  };
  if (d <= kMaxExplicitDim) {
    const auto via_matrix =
        entangling_measurement(r)(tensor(object.matrix(), pointer.matrix()));
    checks["closed_form_matches_superoperator"] =
        max_abs(via_matrix - joint.matrix()) <= kIdentityTolerance;
  }
  report["checks"] = std::move(checks);
}

void cmd_spectrum(const ScenarioFile& s, json& report) {
  const std::size_t d = s.dimension;
  if (d > kMaxExplicitDim) {
    throw DimensionError("spectrum: dimension " + std::to_string(d) + " exceeds the cap " +
                         std::to_string(kMaxExplicitDim));
  }
  const auto r = entanglement_of(s.entanglement_matrix, d, "entanglement_matrix");
  const auto m = entangling_measurement(r);
  const auto spectral = spectral_report(m);

  json eigenvalues = json::array();
  for (const auto& c : spectral.spectrum.eigenvalues) {
    eigenvalues.push_back({{"value", complex_to_json(c.value)},
                           {"algebraic", c.algebraic},
                           {"geometric", c.geometric}});
  }
  report["eigenvalues"] = std::move(eigenvalues);
  report["results"] = {
      {"unit_eigenspace_dim", spectral.unit_eigenspace_dim},
      {"zero_algebraic_dim", spectral.zero_algebraic_dim},
      {"zero_geometric_dim", spectral.zero_geometric_dim},
      {"defective", spectral.defective},
      {"jordan_chain_count", spectral.jordan_chain_witnesses.size()},
  };

  const auto standard = standard_measurement(ProjectorPartition::complete(d), d);
  json checks = {
      {"square_equals_standard",
       max_abs(compose(m, m).matrix() - standard.matrix()) <= kIdentityTolerance},
      {"completely_positive", is_completely_positive(m)},
  };

  if (d == 2) {
    const Complex q = r.matrix()(0, 1);
    checks["null_forms_annihilated"] = verify_qubit_null_forms(m, q);
    json qubit = {{"q", complex_to_json(q)}};
    if (std::abs(q) > tol::kValidation) {
      const auto w = jordan_witness(m, q);
      qubit["jordan_witness"] = {{"vector", matrix_to_json(w.vector)},
                                 {"image", matrix_to_json(w.image)}};
    }
    qubit["canonical_matrix"] = matrix_to_json(matrix_in_eigen_basis(m, canonical_qubit_basis()));
    report["qubit"] = std::move(qubit);
  }
  report["checks"] = std::move(checks);
}

json transfer_json(const TransferReport& t) {
  return {{"rho_MN", matrix_to_json(t.rho_mn.matrix())},
          {"negativity", clean(t.negativity)},
          {"mutual_information", clean(t.mutual_information)},
          {"is_product", t.is_product},
          {"is_diagonal", t.is_diagonal}};
}

void cmd_transfer(const ScenarioFile& s, const Options& options, json& report) {
  if (!s.transfer) throw ParseError("missing field \"transfer\"");
  const auto& t = *s.transfer;
  const std::size_t da = s.dimension;
  const std::size_t db = t.dimension_b;
  TransferScenario scenario{
      density_of(t.joint_state, da * db, {da, db}),
      entanglement_of(s.entanglement_matrix, da, "entanglement_matrix"),
      entanglement_of(t.entanglement_matrix_b, db, "transfer.entanglement_matrix_b"),
      pointer_of(s.pointer_state, da),
      pointer_of(t.pointer_state_b, db),
  };

  json conventions = json::object();
  json checks = json::object();
  bool no_go = true;
  for (const auto c : {Convention::kProse, Convention::kPrinted}) {
    if (options.convention && *options.convention != c) continue;
    scenario.convention = c;
    const auto result = run_transfer(scenario);
    conventions[to_string(c)] = transfer_json(result);
    const bool holds = result.negativity <= kIdentityTolerance;
    checks[std::string("no_entanglement_") + to_string(c)] = holds;
    no_go = no_go && holds;
  }
  checks["no_go"] = no_go;
  report["conventions"] = std::move(conventions);
  report["checks"] = std::move(checks);
}

void cmd_metrics(const ScenarioFile& s, json& report) {
  const std::size_t d = s.dimension;
  const auto r = entanglement_of(s.entanglement_matrix, d, "entanglement_matrix");
  const auto object = density_of(require_state(s), d, {d});
  const auto pointer = pointer_of(s.pointer_state, d);
  const auto m = metrics_report(r, object, pointer);
  report["results"] = {
      {"entropy_input", clean(m.entropy_input)},
      {"entropy_object", clean(m.entropy_object)},
      {"entropy_pointer", clean(m.entropy_pointer)},
      {"entropy_joint", clean(m.entropy_joint)},
      {"one_time_E", clean(m.one_time_E)},
      {"coherent_information_two_time", clean(m.coherent_information_two_time)},
      {"mutual_information", clean(m.mutual_information)},
  };
  report["checks"] = {
      {"two_time_coherent_information_zero",
       std::abs(m.coherent_information_two_time) <= kIdentityTolerance},
      {"E_nonnegative", m.one_time_E >= -kIdentityTolerance},
      {"E_matches_state_entropies",
       std::abs(m.one_time_E - (m.entropy_pointer - m.entropy_joint)) <= kIdentityTolerance},
  };
}

// --- summary ----------------------------------------------------------------------

void summarize(const json& j, const std::string& prefix, std::ostringstream& os) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      summarize(value, name, os);
    } else if (value.is_boolean() || value.is_number() || value.is_string()) {
      os << "  " << std::left << std::setw(48) << name << " " << value.dump() << "\n";
    }
  }
}

std::string summary_table(const json& report) {
  std::ostringstream os;
  os << kToolName << " " << report.value("command", "") << " ["
     << report.value("status", "") << "]\n";
  for (const char* section : {"results", "checks"}) {
    if (report.contains(section)) summarize(report[section], section, os);
  }
  if (report.contains("conventions")) summarize(report["conventions"], "conventions", os);
  if (report.contains("violations")) {
    for (const auto& v : report["violations"]) os << "  violation: " << v.get<std::string>() << "\n";
  }
  if (report.contains("error")) os << "  error: " << report["error"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "validate") return Command::kValidate;
  if (name == "measure") return Command::kMeasure;
  if (name == "spectrum") return Command::kSpectrum;
  if (name == "transfer") return Command::kTransfer;
  if (name == "metrics") return Command::kMetrics;
  return std::nullopt;
}

const char* to_string(Command c) {
  switch (c) {
    case Command::kValidate: return "validate";
    case Command::kMeasure: return "measure";
    case Command::kSpectrum: return "spectrum";
    case Command::kTransfer: return "transfer";
    case Command::kMetrics: return "metrics";
  }
  return "unknown";
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Outcome run(Command command, const std::string& file_text, const Options& options) {
  Outcome out;
  json& report = out.report;
  report["tool"] = kToolName;
  report["version"] = kToolVersion;
  report["command"] = to_string(command);
  report["input_digest"] = digest(file_text);
  if (command == Command::kTransfer && options.convention) {
    report["convention"] = to_string(*options.convention);
  }

  try {
    const ScenarioFile scenario = parse_scenario_text(file_text);
    switch (command) {
      case Command::kValidate: cmd_validate(scenario, report, out.exit_code); break;
      case Command::kMeasure: cmd_measure(scenario, report); break;
      case Command::kSpectrum: cmd_spectrum(scenario, report); break;
      case Command::kTransfer: cmd_transfer(scenario, options, report); break;
      case Command::kMetrics: cmd_metrics(scenario, report); break;
    }
    report["status"] = out.exit_code == kExitOk ? "ok" : "invalid";
  } catch (const ParseError& e) {
    out.exit_code = kExitInput;
    report["status"] = "error";
    report["error"] = e.what();
  } catch (const json::exception& e) {
    out.exit_code = kExitInput;
    report["status"] = "error";
    report["error"] = e.what();
  } catch (const std::exception& e) {
    out.exit_code = kExitDomain;
    report["status"] = "invalid";
    report["error"] = e.what();
  }
  if (options.summary) out.summary = summary_table(report);
  return out;
}

}  // namespace entmeas::cli
