#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace entmeas {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kValidation = 1e-10;   // Hermiticity, trace, PSD floor
inline constexpr double kCluster = 1e-8;       // eigenvalue clustering
inline constexpr double kRank = 1e-8;          // relative to largest singular value
inline constexpr double kEntropyClamp = 1e-12; // eigenvalues below are treated as 0
}  // namespace tol

enum class Keep { kFirst, kSecond };

struct HermitianEigen {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // orthonormal columns, same order
};

struct EigenvalueCluster {
  Complex value;
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
};

struct GeneralSpectrum {
  std::vector<EigenvalueCluster> eigenvalues;
  bool defective = false;

  /// Cluster whose value lies within `tolerance` of `target`, or nullptr.
  const EigenvalueCluster* find(Complex target, double tolerance = 1e-6) const;
};

/// Throws DimensionError / ValidationError unless every entry is finite.
void require_finite(const ComplexMatrix& m, const char* what);
void require_square(const ComplexMatrix& m, const char* what);

double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kValidation);

/// Kronecker product; row index (i_a * b.rows + i_b), column index likewise.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);

/// Partial trace of a bipartite operator on (d_first x d_second).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_first,
                            std::size_t d_second, Keep keep);

/// Partial trace over every subsystem not listed in `keep` (ascending order kept).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Reorders tensor factors: output subsystem i is input subsystem perm[i].
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> perm);

/// Transpose of the second factor of a bipartite operator.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t d_first,
                                std::size_t d_second);

HermitianEigen eig_hermitian(const ComplexMatrix& m);
GeneralSpectrum eig_general(const ComplexMatrix& m);

/// Number of singular values above `relative * sigma_max`.
std::size_t numerical_rank(const ComplexMatrix& m, double relative = tol::kRank);

/// Orthonormal basis (columns) of the numerical null space.
ComplexMatrix null_space(const ComplexMatrix& m, double relative = tol::kRank);

/// trace(a^dagger b)
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// |k><l| on a d-dimensional space.
ComplexMatrix matrix_unit(std::size_t d, std::size_t k, std::size_t l);

/// Column-stacking vectorization: vec(X)[i + rows * j] = X(i, j).
ComplexVector vectorize(const ComplexMatrix& x);
ComplexMatrix devectorize(const ComplexVector& v, std::size_t rows, std::size_t cols);

}  // namespace entmeas
