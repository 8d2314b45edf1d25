#include "entmeas/transfer_experiment.hpp"

#include <array>
#include <sstream>

#include "entmeas/errors.hpp"
#include "entmeas/info_metrics.hpp"
#include "entmeas/measurement_superop.hpp"

namespace entmeas {

namespace {

constexpr double kNoGoTolerance = 1e-9;
constexpr double kStructureTolerance = 1e-9;

bool off_diagonal_vanishes(const ComplexMatrix& m) {
  ComplexMatrix off = m;
  off.diagonal().setZero();
  return max_abs(off) <= kStructureTolerance;
}

}  // namespace

const char* to_string(Convention c) {
  return c == Convention::kProse ? "prose" : "printed";
}

std::optional<Convention> parse_convention(std::string_view name) {
  if (name == "prose") return Convention::kProse;
  if (name == "printed") return Convention::kPrinted;
  return std::nullopt;
}

void validate_scenario(const TransferScenario& s) {
  if (!s.joint.is_bipartite()) {
    throw DimensionError("transfer: joint state needs subsystem dims (D_A, D_B)");
  }
  const std::size_t da = s.joint.dims()[0];
  const std::size_t db = s.joint.dims()[1];
  if (s.r_a.dim() != da || s.pointer_m.dim() != da || s.r_b.dim() != db ||
      s.pointer_n.dim() != db) {
    std::ostringstream os;
    os << "transfer: joint dims (" << da << ", " << db << ") but R_A " << s.r_a.dim()
       << ", R_B " << s.r_b.dim() << ", pointer M " << s.pointer_m.dim() << ", pointer N "
       << s.pointer_n.dim();
    throw DimensionError(os.str());
  }
}

TransferReport run_transfer(const TransferScenario& s) {
  validate_scenario(s);
  const std::size_t da = s.joint.dims()[0];
  const std::size_t db = s.joint.dims()[1];

  // subsystem order A, B, M, N
  const std::array<std::size_t, 4> dims{da, db, da, db};
  const std::array<ComplexMatrix, 3> factors{s.joint.matrix(), s.pointer_m.matrix(),
                                             s.pointer_n.matrix()};
  ComplexMatrix state = tensor(std::span<const ComplexMatrix>(factors));

  const Superoperator measure_a = entangling_measurement(s.r_a);
  const Superoperator measure_b = entangling_measurement(s.r_b);
  // targets are (object, pointer) for each map
  std::array<std::size_t, 2> targets_a{0, 2};
  std::array<std::size_t, 2> targets_b{1, 3};
  if (s.convention == Convention::kPrinted) {
    targets_a = {2, 0};
    targets_b = {3, 1};
  }
  state = apply_to_subsystems(measure_a, state, dims, targets_a);
  state = apply_to_subsystems(measure_b, state, dims, targets_b);

  const std::array<std::size_t, 2> pointers{2, 3};
  const ComplexMatrix reduced = partial_trace(state, dims, pointers);

  TransferReport report{DensityMatrix::from_matrix(reduced, {da, db})};
  report.convention = s.convention;
  report.negativity = negativity(report.rho_mn);
  report.mutual_information = mutual_information(report.rho_mn);
  const ComplexMatrix marginal_m = partial_trace(reduced, da, db, Keep::kFirst);
  const ComplexMatrix marginal_n = partial_trace(reduced, da, db, Keep::kSecond);
  report.is_product = max_abs(reduced - tensor(marginal_m, marginal_n)) <= kStructureTolerance;
  report.is_diagonal = off_diagonal_vanishes(reduced);
  return report;
}

bool verify_no_go(const TransferScenario& s) {
  for (const auto c : {Convention::kProse, Convention::kPrinted}) {
    TransferScenario variant = s;
    variant.convention = c;
    if (run_transfer(variant).negativity > kNoGoTolerance) return false;
  }
  return true;
}

}  // namespace entmeas
