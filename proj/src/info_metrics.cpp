#include "entmeas/info_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entmeas/errors.hpp"

namespace entmeas {

namespace {

void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (!rho.is_bipartite()) {
    throw DimensionError(std::string(what) + ": state has no bipartite structure");
  }
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > tol::kEntropyClamp) s -= p * std::log2(p);
  }
  return s;
}

double entropy_of_spectrum(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (hermitian + hermitian.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return shannon_entropy({ev.data(), static_cast<std::size_t>(ev.size())});
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of_spectrum(rho.matrix()); }

double entanglement_after_measurement(const EntanglementMatrix& r, const DensityMatrix& object) {
  if (object.dim() != r.dim()) {
    throw DimensionError("entanglement_after_measurement: dimension mismatch");
  }
  const ComplexMatrix& rho = object.matrix();
  std::vector<double> diagonal(object.dim());
  for (std::size_t k = 0; k < diagonal.size(); ++k) {
    diagonal[k] = rho(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
  }
  return shannon_entropy(diagonal) - entropy_of_spectrum(r.matrix().cwiseProduct(rho));
}

Superoperator two_time_channel(const EntanglementMatrix& r, const DensityMatrix& pointer) {
  const std::size_t d = r.dim();
  if (pointer.dim() != d) throw DimensionError("two_time_channel: pointer dimension mismatch");
  if (d > kMaxExplicitDim) {
    // too large for the explicit measurement matrix: tabulate the composite map
    // prepare -> measure -> trace A on matrix units instead
    const ComplexMatrix& rm = r.matrix();
    return Superoperator::from_map({d}, {d}, [&](const ComplexMatrix& x) {
      const ComplexMatrix reduced =
          partial_trace(tensor(x, pointer.matrix()), d, d, Keep::kFirst);
      const auto n = static_cast<Eigen::Index>(d);
      ComplexMatrix joint = ComplexMatrix::Zero(n * n, n * n);
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) joint(k * n + k, l * n + l) = rm(k, l) * reduced(k, l);
      return partial_trace(joint, d, d, Keep::kSecond);
    });
  }
  const auto prepare = Superoperator::from_map(
      {d}, {d, d}, [&](const ComplexMatrix& x) { return tensor(x, pointer.matrix()); });
  const auto trace_object = Superoperator::from_map(
      {d, d}, {d}, [&](const ComplexMatrix& x) { return partial_trace(x, d, d, Keep::kSecond); });
  return compose(trace_object, compose(entangling_measurement(r), prepare));
}

double coherent_information(const Superoperator& channel, const DensityMatrix& rho) {
  if (channel.input_dims().size() != 1 || channel.output_dims().size() != 1) {
    throw DimensionError("coherent_information: channel must act on a single system");
  }
  if (rho.dim() != channel.input_dim()) {
    throw DimensionError("coherent_information: state and channel dimensions differ");
  }
  const std::size_t d = rho.dim();
  const ComplexVector psi = purify(rho.with_dims({d})).amplitudes();
  const ComplexMatrix joint = psi * psi.adjoint();
  const std::vector<std::size_t> dims{d, d};
  const std::vector<std::size_t> target{0};
  const ComplexMatrix with_reference = apply_to_subsystems(channel, joint, dims, target);
  return entropy_of_spectrum(channel(rho.matrix())) - entropy_of_spectrum(with_reference);
}

double mutual_information(const DensityMatrix& bipartite) {
  require_bipartite(bipartite, "mutual_information");
  const auto d1 = bipartite.dims()[0];
  const auto d2 = bipartite.dims()[1];
  const ComplexMatrix& m = bipartite.matrix();
  return entropy_of_spectrum(partial_trace(m, d1, d2, Keep::kFirst)) +
         entropy_of_spectrum(partial_trace(m, d1, d2, Keep::kSecond)) - entropy_of_spectrum(m);
}

double negativity(const DensityMatrix& bipartite) {
  require_bipartite(bipartite, "negativity");
  const ComplexMatrix pt =
      partial_transpose(bipartite.matrix(), bipartite.dims()[0], bipartite.dims()[1]);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (pt + pt.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
  return std::max(0.0, 0.5 * (trace_norm - 1.0));
}

MetricsReport metrics_report(const EntanglementMatrix& r, const DensityMatrix& object,
                             const DensityMatrix& pointer) {
  const DensityMatrix joint = measure_product(r, object, pointer);
  const std::size_t d = r.dim();
  MetricsReport out;
  out.entropy_input = von_neumann_entropy(object);
  out.entropy_object = entropy_of_spectrum(partial_trace(joint.matrix(), d, d, Keep::kFirst));
  out.entropy_pointer = entropy_of_spectrum(partial_trace(joint.matrix(), d, d, Keep::kSecond));
  out.entropy_joint = von_neumann_entropy(joint);
  out.one_time_E = entanglement_after_measurement(r, object);
  out.coherent_information_two_time = coherent_information(two_time_channel(r, pointer), object);
  out.mutual_information = mutual_information(joint);
  return out;
}

}  // namespace entmeas
