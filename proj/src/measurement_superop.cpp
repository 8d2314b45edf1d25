#include "entmeas/measurement_superop.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entmeas/errors.hpp"

namespace entmeas {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// X -> a X b, i.e. (b^T (x) a) on column-stacked operators.
ComplexMatrix sandwich_matrix(const ComplexMatrix& a, const ComplexMatrix& b) {
  return tensor(b.transpose(), a);
}

// Tr_M as a map from operators on A (x) M to operators on A.
ComplexMatrix trace_pointer_matrix(std::size_t d_object, std::size_t d_pointer) {
  return Superoperator::from_map({d_object, d_pointer}, {d_object},
                                 [&](const ComplexMatrix& x) {
                                   return partial_trace(x, d_object, d_pointer, Keep::kFirst);
                                 })
      .matrix();
}

// Y -> Y (x) p, from operators on A to operators on A (x) M.
ComplexMatrix append_pointer_matrix(std::size_t d_object, const ComplexMatrix& p) {
  const auto d_pointer = static_cast<std::size_t>(p.rows());
  return Superoperator::from_map({d_object}, {d_object, d_pointer},
                                 [&](const ComplexMatrix& y) { return tensor(y, p); })
      .matrix();
}

void require_explicit_cap(std::size_t d, const char* what) {
  if (d > kMaxExplicitDim) {
    std::ostringstream os;
    os << what << ": dimension " << d << " exceeds the explicit-matrix cap " << kMaxExplicitDim;
    throw DimensionError(os.str());
  }
}

std::vector<JointComponent> decompose_weighted(const ComplexMatrix& weighted) {
  const auto eig = eig_hermitian(weighted);
  const Eigen::Index d = weighted.rows();
  std::vector<JointComponent> out;
  out.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    JointComponent c;
    c.weight = eig.eigenvalues(k);
    c.coefficients = eig.eigenvectors.col(k);
    c.joint = ComplexVector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) c.joint(i * d + i) = c.coefficients(i);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Superoperator::Superoperator(ComplexMatrix matrix, std::vector<std::size_t> input_dims,
                             std::vector<std::size_t> output_dims)
    : matrix_(std::move(matrix)),
      input_dims_(std::move(input_dims)),
      output_dims_(std::move(output_dims)),
      input_dim_(product(input_dims_)),
      output_dim_(product(output_dims_)) {
  if (matrix_.cols() != idx(input_dim_ * input_dim_) ||
      matrix_.rows() != idx(output_dim_ * output_dim_)) {
    std::ostringstream os;
    os << "superoperator: matrix " << matrix_.rows() << "x" << matrix_.cols()
       << " does not match input dim " << input_dim_ << " and output dim " << output_dim_;
    throw DimensionError(os.str());
  }
  require_finite(matrix_, "superoperator");
}

Superoperator::Superoperator(ComplexMatrix matrix, std::vector<std::size_t> space_dims)
    : Superoperator(std::move(matrix), space_dims, space_dims) {}

Superoperator Superoperator::from_map(std::vector<std::size_t> input_dims,
                                      std::vector<std::size_t> output_dims, const Map& map) {
  const std::size_t n_in = product(input_dims);
  const std::size_t n_out = product(output_dims);
  ComplexMatrix m(idx(n_out * n_out), idx(n_in * n_in));
  ComplexMatrix unit = ComplexMatrix::Zero(idx(n_in), idx(n_in));
  for (std::size_t j = 0; j < n_in; ++j) {
    for (std::size_t i = 0; i < n_in; ++i) {
      unit(idx(i), idx(j)) = 1.0;
      const ComplexMatrix image = map(unit);
      if (image.rows() != idx(n_out) || image.cols() != idx(n_out)) {
        throw DimensionError("superoperator: map output has the wrong shape");
      }
      m.col(idx(i + n_in * j)) = vectorize(image);
      unit(idx(i), idx(j)) = 0.0;
    }
  }
  return Superoperator(std::move(m), std::move(input_dims), std::move(output_dims));
}

Superoperator Superoperator::identity(std::vector<std::size_t> space_dims) {
  const std::size_t n = product(space_dims);
  return Superoperator(ComplexMatrix::Identity(idx(n * n), idx(n * n)), std::move(space_dims));
}

ComplexMatrix Superoperator::operator()(const ComplexMatrix& x) const {
  if (x.rows() != idx(input_dim_) || x.cols() != idx(input_dim_)) {
    std::ostringstream os;
    os << "superoperator: operand " << x.rows() << "x" << x.cols() << " on input dim "
       << input_dim_;
    throw DimensionError(os.str());
  }
  return devectorize(matrix_ * vectorize(x), output_dim_, output_dim_);
}

ProjectorPartition::ProjectorPartition(std::vector<ComplexMatrix> projectors,
                                       std::vector<double> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) throw DimensionError("projector partition: no projectors");
  if (labels_.size() != projectors_.size()) {
    throw DimensionError("projector partition: label count differs from projector count");
  }
  const Eigen::Index d = projectors_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t a = 0; a < projectors_.size(); ++a) {
    const auto& p = projectors_[a];
    if (p.rows() != d || p.cols() != d) {
      throw DimensionError("projector partition: projectors differ in dimension");
    }
    require_finite(p, "projector partition");
    if (!is_hermitian(p)) {
      throw ValidationError(Violation::kNonHermitian, "projector partition: not Hermitian");
    }
    for (std::size_t b = 0; b < projectors_.size(); ++b) {
      const ComplexMatrix expected = a == b ? p : ComplexMatrix::Zero(d, d);
      if (max_abs(p * projectors_[b] - expected) > tol::kValidation) {
        throw ValidationError(Violation::kOutOfRange,
                              "projector partition: projectors are not mutually orthogonal "
                              "idempotents");
      }
    }
    sum += p;
  }
  if (max_abs(sum - ComplexMatrix::Identity(d, d)) > tol::kValidation) {
    throw ValidationError(Violation::kOutOfRange,
                          "projector partition: projectors do not sum to the identity");
  }
}

ProjectorPartition ProjectorPartition::complete(std::size_t d) {
  std::vector<ComplexMatrix> ps;
  std::vector<double> labels;
  for (std::size_t k = 0; k < d; ++k) {
    ps.push_back(matrix_unit(d, k, k));
    labels.push_back(static_cast<double>(k));
  }
  return ProjectorPartition(std::move(ps), std::move(labels));
}

ProjectorPartition ProjectorPartition::from_observable(const ComplexMatrix& observable) {
  const auto eig = eig_hermitian(observable);
  const Eigen::Index n = observable.rows();
  std::vector<ComplexMatrix> ps;
  std::vector<double> labels;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && eig.eigenvalues(end - 1) - eig.eigenvalues(end) <= tol::kCluster) ++end;
    const auto v = eig.eigenvectors.middleCols(start, end - start);
    ps.push_back(v * v.adjoint());
    labels.push_back(eig.eigenvalues.segment(start, end - start).mean());
    start = end;
  }
  return ProjectorPartition(std::move(ps), std::move(labels));
}

QCState classical_pointer_measure(const QCState& state, const ProjectorPartition& partition) {
  if (state.dim() != partition.dim()) {
    throw DimensionError("classical_pointer_measure: partition and state dimensions differ");
  }
  const ComplexMatrix marginal = state.marginal();
  std::map<QCState::Label, ComplexMatrix> out;
  for (std::size_t lambda = 0; lambda < partition.size(); ++lambda) {
    const auto& p = partition.projectors()[lambda];
    out.emplace(static_cast<QCState::Label>(lambda), p * marginal * p);
  }
  return QCState(std::move(out));
}

Superoperator standard_measurement(const ProjectorPartition& partition, std::size_t pointer_dim) {
  if (partition.size() != pointer_dim) {
    std::ostringstream os;
    os << "standard_measurement: " << partition.size() << " projector blocks for pointer dim "
       << pointer_dim;
    throw DimensionError(os.str());
  }
  const std::size_t d = partition.dim();
  require_explicit_cap(std::max(d, pointer_dim), "standard_measurement");
  ComplexMatrix prepare = ComplexMatrix::Zero(idx(d * d * pointer_dim * pointer_dim), idx(d * d));
  for (std::size_t lambda = 0; lambda < pointer_dim; ++lambda) {
    const auto& p = partition.projectors()[lambda];
    prepare += append_pointer_matrix(d, matrix_unit(pointer_dim, lambda, lambda)) *
               sandwich_matrix(p, p);
  }
  return Superoperator(prepare * trace_pointer_matrix(d, pointer_dim), {d, pointer_dim});
}

Superoperator entangling_measurement(const EntanglementMatrix& r) {
  const std::size_t d = r.dim();
  require_explicit_cap(d, "entangling_measurement");
  ComplexMatrix prepare = ComplexMatrix::Zero(idx(d * d * d * d), idx(d * d));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      const Complex weight = r.matrix()(idx(k), idx(l));
      if (weight == Complex{}) continue;
      prepare += weight * append_pointer_matrix(d, matrix_unit(d, k, l)) *
                 sandwich_matrix(matrix_unit(d, k, k), matrix_unit(d, l, l));
    }
  }
  return Superoperator(prepare * trace_pointer_matrix(d, d), {d, d});
}

Superoperator duplication_measurement(std::size_t d) {
  if (d < 2) throw DimensionError("duplication_measurement: dimension must be >= 2");
  return entangling_measurement(EntanglementMatrix::ones(d));
}

DensityMatrix apply(const Superoperator& s, const DensityMatrix& rho) {
  if (rho.dim() != s.input_dim()) {
    std::ostringstream os;
    os << "apply: state dimension " << rho.dim() << " but superoperator input dimension "
       << s.input_dim();
    throw DimensionError(os.str());
  }
  return DensityMatrix::from_matrix(s(rho.matrix()), s.output_dims());
}

DensityMatrix measure_product(const EntanglementMatrix& r, const DensityMatrix& object,
                              const DensityMatrix& pointer) {
  const std::size_t d = r.dim();
  if (object.dim() != d || pointer.dim() != d) {
    std::ostringstream os;
    os << "measure_product: entanglement matrix is " << d << "x" << d << ", object dim "
       << object.dim() << ", pointer dim " << pointer.dim();
    throw DimensionError(os.str());
  }
  const auto n = idx(d);
  ComplexMatrix out = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l)
      out(k * n + k, l * n + l) = r.matrix()(k, l) * object.matrix()(k, l);
  return DensityMatrix::from_matrix(out, {d, d});
}

DensityMatrix measure_joint(const EntanglementMatrix& r, const DensityMatrix& joint,
                            const DensityMatrix& pointer) {
  if (!joint.is_bipartite()) {
    throw DimensionError("measure_joint: joint state needs two subsystem dims");
  }
  const ComplexMatrix reduced =
      partial_trace(joint.matrix(), joint.dims()[0], joint.dims()[1], Keep::kFirst);
  return measure_product(r, DensityMatrix::from_matrix(reduced), pointer);
}

Superoperator compose(const Superoperator& s1, const Superoperator& s2) {
  if (s1.input_dims() != s2.output_dims()) {
    throw DimensionError("compose: output space of the inner map differs from input of the outer");
  }
  return Superoperator(s1.matrix() * s2.matrix(), s2.input_dims(), s1.output_dims());
}

ComplexMatrix choi_matrix(const Superoperator& s) {
  const std::size_t n_in = s.input_dim();
  const std::size_t n_out = s.output_dim();
  ComplexMatrix choi = ComplexMatrix::Zero(idx(n_out * n_in), idx(n_out * n_in));
  for (std::size_t i = 0; i < n_in; ++i) {
    for (std::size_t j = 0; j < n_in; ++j) {
      const ComplexMatrix image = s(matrix_unit(n_in, i, j));
      // image (x) |i><j|
      for (Eigen::Index a = 0; a < idx(n_out); ++a)
        for (Eigen::Index b = 0; b < idx(n_out); ++b)
          choi(a * idx(n_in) + idx(i), b * idx(n_in) + idx(j)) += image(a, b);
    }
  }
  return choi;
}

bool is_completely_positive(const Superoperator& s) {
  return is_positive_semidefinite(choi_matrix(s));
}

Superoperator adjoint(const Superoperator& s) {
  return Superoperator(s.matrix().adjoint(), s.output_dims(), s.input_dims());
}

std::vector<JointComponent> joint_output_decomposition(const EntanglementMatrix& r,
                                                       const PureState& psi) {
  if (psi.dim() != r.dim()) {
    throw DimensionError("joint_output_decomposition: state and entanglement matrix differ");
  }
  const ComplexVector& c = psi.amplitudes();
  return decompose_weighted(r.matrix().cwiseProduct(c * c.adjoint()));
}

std::vector<JointComponent> joint_output_decomposition(const EntanglementMatrix& r,
                                                       const DensityMatrix& rho) {
  if (rho.dim() != r.dim()) {
    throw DimensionError("joint_output_decomposition: state and entanglement matrix differ");
  }
  return decompose_weighted(r.matrix().cwiseProduct(rho.matrix()));
}

ComplexMatrix apply_to_subsystems(const Superoperator& s, const ComplexMatrix& x,
                                  std::span<const std::size_t> dims,
                                  std::span<const std::size_t> targets) {
  const std::size_t k = dims.size();
  if (targets.size() != s.input_dims().size() || targets.size() != s.output_dims().size()) {
    throw DimensionError("apply_to_subsystems: target count does not match the map");
  }
  std::vector<std::size_t> perm(targets.begin(), targets.end());
  std::vector<bool> used(k, false);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= k || used[targets[i]]) {
      throw DimensionError("apply_to_subsystems: invalid target list");
    }
    if (dims[targets[i]] != s.input_dims()[i]) {
      throw DimensionError("apply_to_subsystems: target dimension mismatch");
    }
    used[targets[i]] = true;
  }
  std::size_t d_rest = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (!used[i]) {
      perm.push_back(i);
      d_rest *= dims[i];
    }
  }
  const ComplexMatrix xp = permute_subsystems(x, dims, perm);
  const auto t_in = idx(s.input_dim());
  const auto t_out = idx(s.output_dim());
  const auto rest = idx(d_rest);

  // index in the permuted order is t * rest + r
  ComplexMatrix y = ComplexMatrix::Zero(t_out * rest, t_out * rest);
  ComplexMatrix block(t_in, t_in);
  for (Eigen::Index r = 0; r < rest; ++r) {
    for (Eigen::Index rp = 0; rp < rest; ++rp) {
      for (Eigen::Index a = 0; a < t_in; ++a)
        for (Eigen::Index b = 0; b < t_in; ++b) block(a, b) = xp(a * rest + r, b * rest + rp);
      const ComplexMatrix image = s(block);
      for (Eigen::Index a = 0; a < t_out; ++a)
        for (Eigen::Index b = 0; b < t_out; ++b) y(a * rest + r, b * rest + rp) = image(a, b);
    }
  }

  std::vector<std::size_t> permuted_dims(s.output_dims());
  for (std::size_t i = targets.size(); i < k; ++i) permuted_dims.push_back(dims[perm[i]]);
  std::vector<std::size_t> inverse(k);
  for (std::size_t i = 0; i < k; ++i) inverse[perm[i]] = i;
  return permute_subsystems(y, permuted_dims, inverse);
}

}  // namespace entmeas
