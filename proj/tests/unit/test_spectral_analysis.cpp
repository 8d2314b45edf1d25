#include <gtest/gtest.h>

#include "entmeas/errors.hpp"
#include "entmeas/measurement_superop.hpp"
#include "entmeas/spectral_analysis.hpp"
#include "test_support.hpp"

using namespace entmeas;
using namespace entmeas::testing;

namespace {

Superoperator qubit_map(C q) { return entangling_measurement(qubit_family(q)); }

}  // namespace

TEST(SpectralReport, QubitDefectiveForNonzeroQ) {
  for (C q : {C(0.5, 0), C(1.0, 0), C(0.3, 0.4), C(-0.2, 0)}) {
    const auto r = spectral_report(qubit_map(q));
    EXPECT_EQ(r.unit_eigenspace_dim, 2u);
    EXPECT_EQ(r.zero_algebraic_dim, 14u);
    EXPECT_EQ(r.zero_geometric_dim, 12u);
    EXPECT_TRUE(r.defective);
    EXPECT_EQ(r.jordan_chain_witnesses.size(), 2u);
  }
}

TEST(SpectralReport, QubitDiagonalizableAtZero) {
  const auto r = spectral_report(qubit_map(0.0));
  EXPECT_EQ(r.unit_eigenspace_dim, 2u);
  EXPECT_EQ(r.zero_algebraic_dim, 14u);
  EXPECT_EQ(r.zero_geometric_dim, 14u);
  EXPECT_FALSE(r.defective);
  EXPECT_TRUE(r.jordan_chain_witnesses.empty());
}

TEST(SpectralReport, WitnessesFormChains) {
  std::mt19937 rng(401);
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto m = entangling_measurement(EntanglementMatrix(random_entanglement_matrix(d, rng)));
    const auto r = spectral_report(m);
    EXPECT_EQ(r.unit_eigenspace_dim, d);
    EXPECT_EQ(r.zero_algebraic_dim, d * d * d * d - d);
    for (const auto& w : r.jordan_chain_witnesses) {
      EXPECT_GT(max_abs(w.image), 1e-8);
      EXPECT_LT(max_abs_diff(m(w.vector), w.image), 1e-12);
      EXPECT_LT(max_abs(m(w.image)), 1e-10);
    }
    // eigenvalues are only 0 and 1 because M^2 is a projector
    for (const auto& c : r.spectrum.eigenvalues) {
      EXPECT_TRUE(std::abs(c.value) < 1e-8 || std::abs(c.value - 1.0) < 1e-8);
    }
  }
}

TEST(SpectralReport, DuplicationHasManyChains) {
  // R = ones: every off-diagonal pair (k != l) contributes a chain
  const auto r = spectral_report(duplication_measurement(3));
  EXPECT_TRUE(r.defective);
  EXPECT_EQ(r.zero_algebraic_dim - r.zero_geometric_dim, 6u);
}

TEST(SpectralReport, RejectsNonMeasurementShapes) {
  EXPECT_THROW(spectral_report(Superoperator::identity({2})), DimensionError);
  EXPECT_THROW(spectral_report(Superoperator::identity({2, 3})), DimensionError);
}

TEST(NullForms, AnnihilatedForAnyQ) {
  const auto forms = qubit_null_forms();
  ASSERT_EQ(forms.size(), 12u);
  for (C q : {C(0, 0), C(0.5, 0), C(0, 1)}) {
    const auto m = qubit_map(q);
    EXPECT_TRUE(verify_qubit_null_forms(m, q));
    for (const auto& f : forms) EXPECT_LT(max_abs(m(f)), 1e-14);
  }
}

TEST(NullForms, ImproperPairOnlyAtZero) {
  // at q != 0 the zero-q check must fail because P12 (x) I is not annihilated
  const auto m = qubit_map(0.5);
  EXPECT_FALSE(verify_qubit_null_forms(m, 0.0));
  EXPECT_TRUE(verify_qubit_null_forms(qubit_map(0.0), 0.0));
}

TEST(JordanWitness, ImageFollowsClosedForm) {
  for (C q : {C(0.5, 0), C(0.3, -0.7)}) {
    const auto w = jordan_witness(qubit_map(q), q);
    const Mat expected_v = oracle_kron(unit(2, 0, 1), Mat::Identity(2, 2)) / 2.0;
    EXPECT_LT(max_abs_diff(w.vector, expected_v), 1e-15);
    // direct substitution: Tr_M v = P12, so the map gives R_12 P11 P12 P22 (x) |1><2|
    EXPECT_LT(max_abs_diff(w.image, q * oracle_kron(unit(2, 0, 1), unit(2, 0, 1))), 1e-14);
  }
  EXPECT_THROW(jordan_witness(qubit_map(0.0), 0.0), ValidationError);
  // a map that does not match q fails the chain check
  EXPECT_THROW(jordan_witness(qubit_map(0.5), 0.9), std::domain_error);
}

TEST(CanonicalBasis, LinearlyIndependent) {
  const auto basis = canonical_qubit_basis();
  ASSERT_EQ(basis.size(), 16u);
  Mat cols(16, 16);
  for (Eigen::Index i = 0; i < 16; ++i) cols.col(i) = vectorize(basis[static_cast<std::size_t>(i)]);
  EXPECT_EQ(numerical_rank(cols), 16u);
}

TEST(CanonicalMatrix, SparsityPattern) {
  for (C q : {C(0.5, 0), C(0.3, 0.4), C(0, 0)}) {
    const Mat c = matrix_in_eigen_basis(qubit_map(q), canonical_qubit_basis());
    Mat expected = Mat::Zero(16, 16);
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    expected(12, 14) = q;
    expected(13, 15) = std::conj(q);
    EXPECT_LT(max_abs_diff(c, expected), 1e-10) << "q=" << q;
  }
}

TEST(CanonicalMatrix, OrthonormalBasisGivesConjugation) {
  // with the matrix-unit basis the coordinates are the superoperator matrix itself
  std::vector<ComplexMatrix> units;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) units.push_back(unit(4, i, j));
  const auto m = qubit_map(0.5);
  EXPECT_LT(max_abs_diff(matrix_in_eigen_basis(m, units), m.matrix()), 1e-14);
}

TEST(CanonicalMatrix, SingularBasisRejected) {
  auto basis = canonical_qubit_basis();
  basis[3] = basis[2];
  try {
    matrix_in_eigen_basis(qubit_map(0.5), basis);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation(), Violation::kSingularBasis);
  }
  basis.pop_back();
  EXPECT_THROW(matrix_in_eigen_basis(qubit_map(0.5), basis), DimensionError);
}
