#include "entmeas/scenario.hpp"

#include <charconv>
#include <cmath>
#include <string_view>

#include "entmeas/quantum_state.hpp"

namespace entmeas::cli {

using nlohmann::json;

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t parse_dimension(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

ComplexVector parse_vector(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("amplitudes must be a non-empty array");
  ComplexVector v(idx(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(idx(i)) = parse_complex(j[i]);
  return v;
}

StateInput from_amplitudes(std::string source, ComplexVector v) {
  StateInput s;
  s.source = std::move(source);
  s.density = v * v.adjoint();
  s.amplitudes = std::move(v);
  return s;
}

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t k = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return k;
}

StateInput preset_state(const std::string& name, std::size_t dim, std::size_t factor) {
  if (name == "max-uncertainty") {
    return from_amplitudes(name, maximum_uncertainty_state(dim).amplitudes());
  }
  if (name == "max-mixed") {
    StateInput s;
    s.source = name;
    s.density = ComplexMatrix::Identity(idx(dim), idx(dim)) / double(dim);
    return s;
  }
  if (name == "bell") {
    if (factor == 0 || factor * factor != dim) {
      throw ParseError("preset \"bell\" needs a joint space of two equal dimensions");
    }
    return from_amplitudes(name, maximally_entangled_state(factor).amplitudes());
  }
  if (name.rfind("basis:", 0) == 0) {
    const auto k = parse_index(std::string_view(name).substr(6));
    if (!k || *k >= dim) throw ParseError("preset \"" + name + "\" is out of range");
    return from_amplitudes(name, basis_state(dim, *k).amplitudes());
  }
  throw ParseError("unknown state preset \"" + name + "\"");
}

}  // namespace

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("complex numbers must be [re, im] pairs, got " + j.dump());
}

ComplexMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError("matrices must be non-empty nested arrays");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix m(idx(rows), idx(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(idx(r), idx(c)) = parse_complex(j[r][c]);
  }
  return m;
}

StateInput parse_state(const json& j, std::size_t dim, std::size_t factor) {
  if (j.is_string()) return preset_state(j.get<std::string>(), dim, factor);
  if (!j.is_object()) throw ParseError("state must be an object or a preset name");
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) throw ParseError("\"preset\" must be a string");
    return preset_state(j["preset"].get<std::string>(), dim, factor);
  }
  if (j.contains("pure")) return from_amplitudes("pure", parse_vector(j["pure"]));
  if (j.contains("density")) {
    StateInput s;
    s.source = "density";
    s.density = parse_matrix(j["density"]);
    return s;
  }
  throw ParseError("state needs one of \"preset\", \"pure\" or \"density\"");
}

ScenarioFile parse_scenario(const json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  ScenarioFile s;
  s.dimension = parse_dimension(j, "dimension");
  s.entanglement_matrix = parse_matrix(require(j, "entanglement_matrix"));
  if (j.contains("state")) s.state = parse_state(j["state"], s.dimension);
  if (j.contains("pointer_state")) s.pointer_state = parse_state(j["pointer_state"], s.dimension);
  if (j.contains("transfer")) {
    const json& t = j["transfer"];
    TransferInput in;
    in.dimension_b = parse_dimension(t, "dimension_b");
    in.entanglement_matrix_b = parse_matrix(require(t, "entanglement_matrix_b"));
    const std::size_t joint_dim = s.dimension * in.dimension_b;
    const std::size_t factor = s.dimension == in.dimension_b ? s.dimension : 0;
    in.joint_state = parse_state(require(t, "joint_state"), joint_dim, factor);
    if (t.contains("pointer_state_b")) {
      in.pointer_state_b = parse_state(t["pointer_state_b"], in.dimension_b);
    }
    s.transfer = std::move(in);
  }
  return s;
}

ScenarioFile parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_scenario(j);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json complex_to_json(Complex z) {
  // snap rounding noise so reports stay readable; -0.0 becomes 0.0
  auto clean = [](double x) { return std::abs(x) < 1e-15 ? 0.0 : x; };
  return json::array({clean(z.real()), clean(z.imag())});
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace entmeas::cli
