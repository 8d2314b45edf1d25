#include <gtest/gtest.h>

#include <array>

#include "entmeas/errors.hpp"
#include "entmeas/operator_core.hpp"
#include "test_support.hpp"

using namespace entmeas;
using namespace entmeas::testing;

TEST(Tensor, MatchesIndexOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = random_density(2, rng);
    const Mat b = random_density(3, rng);
    EXPECT_LT(max_abs_diff(tensor(a, b), oracle_kron(a, b)), 1e-15);
  }
}

TEST(Tensor, RectangularFactors) {
  Mat a(1, 2);
  a << 1.0, 2.0;
  Mat b(2, 1);
  b << 3.0, C(0, 1);
  const Mat t = tensor(a, b);
  ASSERT_EQ(t.rows(), 2);
  ASSERT_EQ(t.cols(), 2);
  EXPECT_LT(max_abs_diff(t, oracle_kron(a, b)), 1e-15);
}

TEST(Tensor, SpanOfThreeIsAssociative) {
  std::mt19937 rng(12);
  const std::array<ComplexMatrix, 3> f{random_density(2, rng), random_density(2, rng),
                                       random_density(3, rng)};
  const Mat expected = oracle_kron(oracle_kron(f[0], f[1]), f[2]);
  EXPECT_LT(max_abs_diff(tensor(std::span<const ComplexMatrix>(f)), expected), 1e-14);
}

TEST(Tensor, TraceFactorizes) {
  // Tr(A (x) B) = Tr A Tr B by direct index contraction
  std::mt19937 rng(13);
  const Mat a = random_density(3, rng) * C(2, 1);
  const Mat b = random_density(2, rng) * C(0.5, -1);
  const Mat t = tensor(a, b);
  C contracted = 0;
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index k = 0; k < 2; ++k) contracted += t(i * 2 + k, i * 2 + k);
  EXPECT_LT(std::abs(contracted - a.trace() * b.trace()), 1e-13);
}

TEST(PartialTrace, MatchesLoopOracle) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat m = random_density(6, rng);
    EXPECT_LT(max_abs_diff(partial_trace(m, 2, 3, Keep::kFirst), oracle_trace_second(m, 2, 3)),
              1e-14);
    EXPECT_LT(max_abs_diff(partial_trace(m, 2, 3, Keep::kSecond), oracle_trace_first(m, 2, 3)),
              1e-14);
  }
}

TEST(PartialTrace, ProductStateReturnsFactor) {
  std::mt19937 rng(22);
  const Mat a = random_density(3, rng);
  const Mat b = random_density(4, rng);
  const Mat ab = oracle_kron(a, b);
  EXPECT_LT(max_abs_diff(partial_trace(ab, 3, 4, Keep::kFirst), a), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(ab, 3, 4, Keep::kSecond), b), 1e-14);
}

TEST(PartialTrace, MultipartiteKeepsListedSubsystems) {
  std::mt19937 rng(23);
  const Mat a = random_density(2, rng);
  const Mat b = random_density(3, rng);
  const Mat c = random_density(2, rng);
  const Mat abc = oracle_kron(oracle_kron(a, b), c);
  const std::array<std::size_t, 3> dims{2, 3, 2};
  const std::array<std::size_t, 2> keep_ac{0, 2};
  EXPECT_LT(max_abs_diff(partial_trace(abc, dims, keep_ac), oracle_kron(a, c)), 1e-14);
  const std::array<std::size_t, 1> keep_b{1};
  EXPECT_LT(max_abs_diff(partial_trace(abc, dims, keep_b), b), 1e-14);
}

TEST(PartialTrace, RejectsMismatchedDims) {
  const Mat m = Mat::Identity(5, 5);
  EXPECT_THROW(partial_trace(m, 2, 3, Keep::kFirst), DimensionError);
}

TEST(Permute, SwapsFactors) {
  std::mt19937 rng(31);
  const Mat a = random_density(2, rng);
  const Mat b = random_density(3, rng);
  const std::array<std::size_t, 2> dims{2, 3};
  const std::array<std::size_t, 2> perm{1, 0};
  EXPECT_LT(max_abs_diff(permute_subsystems(oracle_kron(a, b), dims, perm), oracle_kron(b, a)),
            1e-15);
}

TEST(Permute, IdentityPermutationIsNoop) {
  std::mt19937 rng(32);
  const Mat m = random_density(12, rng);
  const std::array<std::size_t, 3> dims{2, 3, 2};
  const std::array<std::size_t, 3> perm{0, 1, 2};
  EXPECT_LT(max_abs_diff(permute_subsystems(m, dims, perm), m), 1e-15);
}

TEST(PartialTranspose, MatchesLoopOracle) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat m = random_density(6, rng);
    EXPECT_LT(max_abs_diff(partial_transpose(m, 3, 2), oracle_partial_transpose_second(m, 3, 2)),
              1e-15);
  }
}

TEST(EigHermitian, DescendingAndReconstructs) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat h = random_density(4, rng);
    const auto e = eig_hermitian(h);
    for (Eigen::Index i = 1; i < e.eigenvalues.size(); ++i)
      EXPECT_GE(e.eigenvalues(i - 1), e.eigenvalues(i));
    const Mat rebuilt = e.eigenvectors * e.eigenvalues.cast<C>().asDiagonal() *
                        e.eigenvectors.adjoint();
    EXPECT_LT(max_abs_diff(rebuilt, h), 1e-12);
    EXPECT_LT(max_abs_diff(e.eigenvectors.adjoint() * e.eigenvectors, Mat::Identity(4, 4)),
              1e-12);
  }
}

TEST(EigHermitian, TwoByTwoCharacteristicPolynomial) {
  // lambda = (a + d)/2 +- sqrt(((a - d)/2)^2 + |b|^2)
  std::mt19937 rng(52);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = u(rng);
    const double d = u(rng);
    const C b(u(rng), u(rng));
    Mat h(2, 2);
    h << a, b, std::conj(b), d;
    const double mean = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    const auto e = eig_hermitian(h);
    EXPECT_NEAR(e.eigenvalues(0), mean + rad, 1e-12);
    EXPECT_NEAR(e.eigenvalues(1), mean - rad, 1e-12);
  }
}

TEST(EigHermitian, DeterministicPhase) {
  Mat h(2, 2);
  h << 0.0, C(0, 1), C(0, -1), 0.0;
  const auto e = eig_hermitian(h);
  for (Eigen::Index c = 0; c < 2; ++c) {
    Eigen::Index arg = 0;
    e.eigenvectors.col(c).cwiseAbs().maxCoeff(&arg);
    EXPECT_NEAR(e.eigenvectors(arg, c).imag(), 0.0, 1e-14);
    EXPECT_GT(e.eigenvectors(arg, c).real(), 0.0);
  }
  const auto again = eig_hermitian(h);
  EXPECT_EQ(max_abs_diff(e.eigenvectors, again.eigenvectors), 0.0);
}

TEST(EigHermitian, RejectsNonHermitian) {
  Mat m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  try {
    eig_hermitian(m);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation(), Violation::kNonHermitian);
  }
}

TEST(EigHermitian, RejectsNaN) {
  Mat m = Mat::Identity(2, 2);
  m(0, 0) = std::nan("");
  try {
    eig_hermitian(m);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation(), Violation::kNonFinite);
  }
}

TEST(EigGeneral, JordanBlockIsDefective) {
  Mat j = Mat::Zero(3, 3);
  j(0, 1) = 1.0;
  const auto s = eig_general(j);
  ASSERT_EQ(s.eigenvalues.size(), 1u);
  EXPECT_EQ(s.eigenvalues[0].algebraic, 3u);
  EXPECT_EQ(s.eigenvalues[0].geometric, 2u);
  EXPECT_TRUE(s.defective);
}

TEST(EigGeneral, DiagonalizableClusters) {
  Mat m = Mat::Zero(4, 4);
  m.diagonal() << 1.0, 0.0, 1.0, C(0, 1);
  const auto s = eig_general(m);
  ASSERT_EQ(s.eigenvalues.size(), 3u);
  EXPECT_FALSE(s.defective);
  const auto* one = s.find(1.0);
  ASSERT_NE(one, nullptr);
  EXPECT_EQ(one->algebraic, 2u);
  EXPECT_EQ(one->geometric, 2u);
  // sorted by descending real part
  EXPECT_NEAR(s.eigenvalues.front().value.real(), 1.0, 1e-12);
  EXPECT_EQ(s.find(C(5, 5)), nullptr);
}

TEST(Rank, NullSpaceIsOrthonormalAndAnnihilated) {
  std::mt19937 rng(61);
  const Vec u = random_unit_vector(5, rng);
  const Vec v = random_unit_vector(5, rng);
  const Mat m = u * u.adjoint() + v * v.adjoint();
  EXPECT_EQ(numerical_rank(m), 2u);
  const Mat n = null_space(m);
  ASSERT_EQ(n.cols(), 3);
  EXPECT_LT(max_abs(m * n), 1e-12);
  EXPECT_LT(max_abs_diff(n.adjoint() * n, Mat::Identity(3, 3)), 1e-12);
}

TEST(Vectorize, ColumnStacking) {
  Mat x(2, 3);
  x << 1, 2, 3, 4, 5, 6;
  const Vec v = vectorize(x);
  for (Eigen::Index j = 0; j < 3; ++j)
    for (Eigen::Index i = 0; i < 2; ++i) EXPECT_EQ(v(i + 2 * j), x(i, j));
  EXPECT_EQ(max_abs_diff(devectorize(v, 2, 3), x), 0.0);
}

TEST(Vectorize, SandwichIdentity) {
  // vec(A X B) = (B^T (x) A) vec(X)
  std::mt19937 rng(62);
  const Mat a = random_density(3, rng);
  const Mat b = random_density(3, rng) * C(1, 2);
  const Mat x = random_density(3, rng);
  const Vec lhs = vectorize(a * x * b);
  const Vec rhs = oracle_kron(b.transpose(), a) * vectorize(x);
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(HsInner, ConjugatesFirstArgument) {
  const Mat a = unit(2, 0, 1) * C(0, 1);
  const Mat b = unit(2, 0, 1);
  EXPECT_LT(std::abs(hs_inner(a, b) - C(0, -1)), 1e-15);
}

TEST(MatrixUnit, RangeChecked) {
  EXPECT_EQ(max_abs_diff(matrix_unit(3, 1, 2), unit(3, 1, 2)), 0.0);
  EXPECT_THROW(matrix_unit(3, 3, 0), std::exception);
}

TEST(Hermitian, ToleranceBoundary) {
  Mat m = Mat::Identity(2, 2);
  m(0, 1) = 1e-12;
  EXPECT_TRUE(is_hermitian(m));
  m(0, 1) = 1e-6;
  EXPECT_FALSE(is_hermitian(m));
}
