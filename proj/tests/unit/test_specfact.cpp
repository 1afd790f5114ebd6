#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "symlog/error.hpp"
#include "symlog/gen.hpp"
#include "symlog/specfact.hpp"

using namespace symlog;
using std::numbers::pi;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no symlog::Error thrown";
  return ErrorCode::Io;
}

double eig_residual(const CMatrix& u, const DiagResult& r) {
  const Eigen::VectorXcd d = (Complex(0, 1) * r.phases.cast<Complex>()).array().exp();
  return oracle::spectral_norm(u * r.q - r.q * d.asDiagonal());
}

}  // namespace

TEST(DiagStructured, Identity) {
  const auto r = diag_structured(CMatrix::Identity(4, 4), SymmetryClass::GenericA, SymmetryContext(4));
  EXPECT_LE(r.phases.cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE(oracle::unitarity(r.q), 1e-15);
}

TEST(DiagStructured, ChiralRotationBlock) {
  const double theta = 0.7;
  CMatrix b(2, 2);
  b << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  const auto r = diag_structured(b, SymmetryClass::ChiralAIII, SymmetryContext(2));
  EXPECT_NEAR(r.phases(0), -theta, 1e-14);
  EXPECT_NEAR(r.phases(1), theta, 1e-14);
  // Expected columns (1/sqrt2)(-i, 1) and (1/sqrt2)(i, 1), each up to a phase.
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::Vector2cd want0(Complex(0, -s), s), want1(Complex(0, s), s);
  EXPECT_NEAR(std::abs(want0.dot(r.q.col(0))), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(want1.dot(r.q.col(1))), 1.0, 1e-14);
  EXPECT_LE(eig_residual(b, r), 1e-14);
}

TEST(DiagStructured, SymmetricConstructionOracle) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto con = random_gapped_construction(SymmetryClass::SymmetricAI, 8, GapSpec{1e-3, 2}, seed);
    const CMatrix u = con.unitary();
    const auto r = diag_structured(u, SymmetryClass::SymmetricAI, SymmetryContext(8));
    EXPECT_LE(oracle::sorted_distance(r.phases, con.phases), 1e-11);
    EXPECT_EQ(r.q.imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE(oracle::unitarity(r.q), 1e-12);
    EXPECT_LE(eig_residual(u, r), 1e-11);
  }
}

TEST(DiagStructured, ChiralPairing) {
  const Eigen::Index n = 12, h = n / 2;
  const CMatrix g = oracle::gamma(n);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const CMatrix u = random_gapped_unitary(SymmetryClass::ChiralAIII, n, GapSpec{1e-6, 4}, seed);
    const auto r = diag_structured(u, SymmetryClass::ChiralAIII, SymmetryContext(n));
    for (Eigen::Index j = 0; j < h; ++j) {
      EXPECT_LE((g * r.q.col(j) - r.q.col(j + h)).norm(), 1e-12);
      EXPECT_LE(std::abs(r.phases(j) + r.phases(j + h)), 1e-12);
      if (j > 0) EXPECT_LE(r.phases(j - 1), r.phases(j));
    }
    EXPECT_LE(oracle::unitarity(r.q), 1e-12);
    EXPECT_LE(eig_residual(u, r), 1e-11);
  }
}

TEST(DiagStructured, GenericAgreesWithEigenphases) {
  const CMatrix u = random_gapped_unitary(SymmetryClass::GenericA, 10, GapSpec{1e-2, 2}, 3);
  const auto r = diag_structured(u, SymmetryClass::GenericA, SymmetryContext(10));
  EXPECT_LE(oracle::sorted_distance(r.phases, oracle::eigenphases(u)), 1e-11);
  for (Eigen::Index i = 1; i < 10; ++i) EXPECT_LE(r.phases(i - 1), r.phases(i));
  EXPECT_LE(eig_residual(u, r), 1e-11);
}

TEST(DiagStructured, SelfDualRejected) {
  const CMatrix u = random_gapped_unitary(SymmetryClass::SelfDualAII, 4, GapSpec{0.1, 2}, 1);
  EXPECT_EQ(code_of([&] { diag_structured(u, SymmetryClass::SelfDualAII, SymmetryContext(4)); }),
            ErrorCode::UnsupportedClass);
}

TEST(DiagStructured, ObstructionPropagates) {
  const SymmetryContext ctx(4);
  EXPECT_EQ(code_of([&] { diag_structured(ctx.gamma(), SymmetryClass::ChiralAIII, ctx); }),
            ErrorCode::ObstructionDetected);
}

TEST(Reconstruct, IdentityRoundTrip) {
  const auto r = diag_structured(CMatrix::Identity(3, 3), SymmetryClass::GenericA, SymmetryContext(3));
  EXPECT_LE(oracle::spectral_norm(reconstruct(r) - CMatrix::Identity(3, 3)), 1e-15);
}

TEST(Reconstruct, RoundTripAndPeriodicity) {
  const CMatrix u = random_gapped_unitary(SymmetryClass::ChiralAIII, 8, GapSpec{1e-4, 2}, 9);
  auto r = diag_structured(u, SymmetryClass::ChiralAIII, SymmetryContext(8));
  const CMatrix back = reconstruct(r);
  EXPECT_LE(oracle::spectral_norm(back - u), 1e-11);
  EXPECT_LE(oracle::spectral_norm(back - oracle::from_phases(r.q, r.phases)), 1e-15);
  r.phases(2) += 2 * pi;
  EXPECT_LE(oracle::spectral_norm(reconstruct(r) - back), 1e-14);
}
