#include <gtest/gtest.h>

#include <numeric>

#include "entmeas/entanglement_matrix.hpp"
#include "entmeas/errors.hpp"
#include "test_support.hpp"

using namespace entmeas;
using namespace entmeas::testing;

namespace {

Violation violation_of(const Mat& m) {
  try {
    EntanglementMatrix{m};
  } catch (const ValidationError& e) {
    return e.violation();
  }
  ADD_FAILURE() << "matrix accepted";
  return Violation::kNonFinite;
}

}  // namespace

TEST(EntanglementMatrix, IdentityAndOnesAreValid) {
  for (std::size_t d = 1; d <= 6; ++d) {
    EXPECT_TRUE(EntanglementMatrix::identity(d).validated());
    EXPECT_TRUE(EntanglementMatrix::ones(d).validated());
  }
}

TEST(EntanglementMatrix, RandomGramMatricesAreValid) {
  std::mt19937 rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> dd(1, 6);
    EXPECT_NO_THROW(EntanglementMatrix(random_entanglement_matrix(dd(rng), rng)));
  }
}

TEST(EntanglementMatrix, RejectionReasons) {
  Mat diag(2, 2);
  diag << 0.9, 0.0, 0.0, 1.0;
  EXPECT_EQ(violation_of(diag), Violation::kOffUnitDiagonal);

  Mat asym(2, 2);
  asym << 1.0, 0.5, 0.2, 1.0;
  EXPECT_EQ(violation_of(asym), Violation::kNonHermitian);

  Mat big(2, 2);
  big << 1.0, 1.1, 1.1, 1.0;
  EXPECT_EQ(violation_of(big), Violation::kNotPositiveSemidefinite);

  // every pair is fine but the triple is not: -1/2 everywhere is PSD, -0.6 is not
  Mat tri = Mat::Constant(3, 3, -0.6);
  tri.diagonal().setOnes();
  EXPECT_EQ(violation_of(tri), Violation::kNotPositiveSemidefinite);
  tri = Mat::Constant(3, 3, -0.5);
  tri.diagonal().setOnes();
  EXPECT_NO_THROW(EntanglementMatrix{tri});

  EXPECT_THROW(EntanglementMatrix(Mat::Ones(2, 3)), DimensionError);
}

TEST(EntanglementMatrix, DiagonalMessageMentionsNormalization) {
  Mat diag(2, 2);
  diag << 0.9, 0.0, 0.0, 1.0;
  try {
    EntanglementMatrix{diag};
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("normalization"), std::string::npos);
  }
}

TEST(EntanglementMatrix, UncheckedBypassesValidation) {
  Mat big(2, 2);
  big << 1.0, 1.3, 1.3, 1.0;
  const auto r = EntanglementMatrix::unchecked(big);
  EXPECT_FALSE(r.validated());
  EXPECT_EQ(r.matrix()(0, 1), C(1.3, 0.0));
}

TEST(QubitFamily, Range) {
  for (double q : {0.0, 0.5, -0.9, 1.0}) EXPECT_NO_THROW(qubit_family(q));
  EXPECT_NO_THROW(qubit_family(std::polar(1.0, 0.7)));
  try {
    qubit_family(1.1);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violation(), Violation::kOutOfRange);
  }
  const auto r = qubit_family(C(0.3, 0.4));
  EXPECT_EQ(r.matrix()(0, 1), C(0.3, 0.4));
  EXPECT_EQ(r.matrix()(1, 0), C(0.3, -0.4));
}

TEST(NormalizedSpectrum, SumsToOneAndIsNonnegative) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = EntanglementMatrix(random_entanglement_matrix(4, rng));
    const auto s = normalized_spectrum(r);
    EXPECT_NEAR(std::accumulate(s.begin(), s.end(), 0.0), 1.0, 1e-12);
    for (double x : s) EXPECT_GE(x, -1e-12);
  }
}

TEST(NormalizedSpectrum, QubitClosedForm) {
  // eigenvalues of R/2 are (1 +- |q|)/2
  const auto s = normalized_spectrum(qubit_family(C(0.3, -0.4)));
  EXPECT_NEAR(s[0], 0.75, 1e-14);
  EXPECT_NEAR(s[1], 0.25, 1e-14);
}
