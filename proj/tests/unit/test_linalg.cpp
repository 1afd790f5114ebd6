#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symlog/error.hpp"
#include "symlog/linalg.hpp"
#include "symlog/rng.hpp"

using namespace symlog;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

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

CMatrix diag2(Complex a, Complex b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(MatMul, IdentityTimesIdentity) { EXPECT_EQ(linalg::mat_mul(linalg::identity(3), linalg::identity(3)), linalg::identity(3)); }

TEST(MatMul, PauliZSquared) {
  const CMatrix d = diag2({0, 1}, {0, -1});
  EXPECT_EQ(linalg::mat_mul(d, d), diag2(-1, -1));
}

TEST(MatMul, MatchesTripleLoop) {
  const CMatrix a = oracle::random_complex(4, 1), b = oracle::random_complex(4, 2);
  const CMatrix ref = oracle::triple_loop_product(a, b);
  EXPECT_LE((linalg::mat_mul(a, b) - ref).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MatMul, DimensionMismatch) {
  EXPECT_EQ(code_of([] { linalg::mat_mul(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)); }),
            ErrorCode::DimensionMismatch);
}

TEST(Inverse, Identity) { EXPECT_EQ(linalg::inverse(linalg::identity(4)), linalg::identity(4)); }

TEST(Inverse, Diagonal) { EXPECT_LE((linalg::inverse(diag2(2, 4)) - diag2(0.5, 0.25)).norm(), 1e-16); }

TEST(Inverse, RandomWellConditioned) {
  const CMatrix a = oracle::random_complex(6, 3) + 3.0 * CMatrix::Identity(6, 6);
  const CMatrix ai = linalg::inverse(a);
  EXPECT_LE((a * ai - CMatrix::Identity(6, 6)).norm(), 1e-12);
}

TEST(Inverse, GradedConditionMeetsResidualBound) {
  // a = U diag(s) V^H with singular values spanning six decades. Both
  // residuals stay below n eps kappa (a correctly rounded inverse already
  // sits near 0.02 n eps kappa here).
  const Eigen::Index n = 10;
  const double kappa = 1e6;
  for (unsigned seed = 0; seed < 5; ++seed) {
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = std::pow(kappa, -double(i) / double(n - 1));
    const CMatrix a = oracle::random_unitary(n, 10 + seed) * s.cast<Complex>().asDiagonal() *
                      oracle::random_unitary(n, 20 + seed).adjoint();
    const CMatrix ai = linalg::inverse(a);
    EXPECT_LE((a * ai - CMatrix::Identity(n, n)).norm(), double(n) * kEps * kappa);
    EXPECT_LE((ai * a - CMatrix::Identity(n, n)).norm(), double(n) * kEps * kappa);
    EXPECT_TRUE(linalg::all_finite(ai));
  }
}

TEST(Inverse, RandomMatricesBothResiduals) {
  for (Eigen::Index n : {5, 16, 40})
    for (unsigned seed = 0; seed < 20; ++seed) {
      const CMatrix a = oracle::random_complex(n, 500 + seed);
      const CMatrix ai = linalg::inverse(a);
      EXPECT_LE((a * ai - CMatrix::Identity(n, n)).norm(), 1e-10);
      EXPECT_LE((ai * a - CMatrix::Identity(n, n)).norm(), 1e-10);
    }
}

TEST(Inverse, SingularRejected) {
  CMatrix a = CMatrix::Ones(3, 3);
  EXPECT_EQ(code_of([&] { linalg::inverse(a); }), ErrorCode::SingularMatrix);
  EXPECT_EQ(code_of([] { linalg::inverse(CMatrix::Zero(2, 2)); }), ErrorCode::SingularMatrix);
}

TEST(Eigh, DiagonalIsSortedAscending) {
  const auto r = linalg::eigh(diag2(3, 1));
  EXPECT_DOUBLE_EQ(r.values(0), 1.0);
  EXPECT_DOUBLE_EQ(r.values(1), 3.0);
  EXPECT_NEAR(std::abs(r.vectors(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(r.vectors(0, 1)), 1.0, 1e-15);
}

TEST(Eigh, PauliX) {
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const auto r = linalg::eigh(x);
  EXPECT_NEAR(r.values(0), -1.0, 1e-15);
  EXPECT_NEAR(r.values(1), 1.0, 1e-15);
  // Column for -1 is (1,-1)/sqrt2 up to phase.
  EXPECT_NEAR(std::abs(r.vectors(0, 0) + r.vectors(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.vectors(0, 1) - r.vectors(1, 1)), 0.0, 1e-15);
}

TEST(Eigh, RandomReconstruction) {
  for (Eigen::Index n : {8, 32, 64}) {
    const CMatrix h = oracle::random_hermitian(n, static_cast<unsigned>(n));
    const auto r = linalg::eigh(h);
    const CMatrix back = r.vectors * r.values.cast<Complex>().asDiagonal() * r.vectors.adjoint();
    EXPECT_LE(oracle::spectral_norm(back - h), n == 8 ? 1e-13 : 1e-12);
    EXPECT_LE(oracle::unitarity(r.vectors), 10.0 * double(n) * kEps);
    for (Eigen::Index i = 1; i < n; ++i) EXPECT_LE(r.values(i - 1), r.values(i));
  }
}

TEST(Eigh, RejectsNonHermitian) {
  CMatrix a(2, 2);
  a << 0, 1, 0, 0;
  EXPECT_EQ(code_of([&] { linalg::eigh(a); }), ErrorCode::NotHermitian);
}

TEST(EighReal, Reconstruction) {
  const RMatrix g = oracle::random_complex(12, 5).real();
  const RMatrix s = 0.5 * (g + g.transpose());
  const auto r = linalg::eigh_real(s);
  EXPECT_LE((r.vectors * r.values.asDiagonal() * r.vectors.transpose() - s).norm(), 1e-13);
}

TEST(Svd, Identity) {
  const auto r = linalg::svd(linalg::identity(3));
  EXPECT_LE((r.s - Eigen::VectorXd::Ones(3)).cwiseAbs().maxCoeff(), 1e-16);
}

TEST(Svd, DescendingOrder) {
  const auto r = linalg::svd(diag2(0, 2));
  EXPECT_DOUBLE_EQ(r.s(0), 2.0);
  EXPECT_DOUBLE_EQ(r.s(1), 0.0);
}

TEST(Svd, RandomReconstruction) {
  for (Eigen::Index n : {6, 64}) {
    const CMatrix a = oracle::random_complex(n, 7);
    const auto r = linalg::svd(a);
    const CMatrix back = r.u * r.s.cast<Complex>().asDiagonal() * r.v.adjoint();
    EXPECT_LE(oracle::spectral_norm(back - a), n == 6 ? 1e-13 : 1e-12);
    EXPECT_LE(oracle::unitarity(r.u), 10.0 * double(n) * kEps);
    EXPECT_LE(oracle::unitarity(r.v), 10.0 * double(n) * kEps);
  }
}

TEST(QrUnitary, Identity) { EXPECT_LE((linalg::qr_unitary(linalg::identity(3)) - linalg::identity(3)).norm(), 1e-16); }

TEST(QrUnitary, SignFixupGivesPositiveR) {
  // diag(-1, 1) = Q R with R's diagonal positive forces Q = diag(-1, 1).
  const CMatrix a = diag2(-1, 1);
  const CMatrix q = linalg::qr_unitary(a);
  const CMatrix r = q.adjoint() * a;
  EXPECT_LE((r - linalg::identity(2)).norm(), 1e-15);
  EXPECT_LE((q - a).norm(), 1e-15);
}

TEST(QrUnitary, GinibreIsUnitaryWithPositiveDiagonal) {
  Rng rng(11);
  const CMatrix g = rng.ginibre(5);
  const CMatrix q = linalg::qr_unitary(g);
  EXPECT_LE(oracle::unitarity(q), 1e-14);
  const CMatrix r = q.adjoint() * g;
  for (Eigen::Index i = 0; i < 5; ++i) {
    EXPECT_GT(r(i, i).real(), 0.0);
    EXPECT_NEAR(r(i, i).imag(), 0.0, 1e-14);
    for (Eigen::Index j = 0; j < i; ++j) EXPECT_LE(std::abs(r(i, j)), 1e-14);
  }
}

TEST(QrUnitary, IdempotentOnCanonicalForm) {
  Rng rng(12);
  const CMatrix q = linalg::qr_unitary(rng.ginibre(6));
  EXPECT_LE((linalg::qr_unitary(q) - q).norm(), 1e-14);
}

TEST(QrUnitary, SingularRejected) {
  EXPECT_EQ(code_of([] { linalg::qr_unitary(CMatrix::Zero(3, 3)); }), ErrorCode::SingularMatrix);
}

TEST(QrOrthogonal, RealAndOrthogonal) {
  Rng rng(13);
  const RMatrix q = linalg::qr_orthogonal(rng.gaussian(7));
  EXPECT_LE((q.transpose() * q - RMatrix::Identity(7, 7)).norm(), 1e-14);
}

TEST(Norms, Identity) {
  EXPECT_NEAR(linalg::spectral_norm(linalg::identity(3)), 1.0, 1e-15);
  EXPECT_NEAR(linalg::frobenius_norm(linalg::identity(3)), std::sqrt(3.0), 1e-15);
}

TEST(Norms, Diagonal) {
  const CMatrix d = diag2(3, {0, -4});
  EXPECT_NEAR(linalg::spectral_norm(d), 4.0, 1e-15);
  EXPECT_NEAR(linalg::frobenius_norm(d), 5.0, 1e-15);
}

TEST(Norms, Equivalence) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const CMatrix a = oracle::random_complex(9, 100 + seed);
    const double s = linalg::spectral_norm(a), f = linalg::frobenius_norm(a);
    EXPECT_NEAR(s, oracle::spectral_norm(a), 1e-13 * s);
    EXPECT_LE(s, f * (1 + 1e-15));
    EXPECT_LE(f, 3.0 * s * (1 + 1e-15));
  }
}

TEST(UnitarityDefect, MatchesDefinition) {
  const CMatrix a = oracle::random_complex(5, 42);
  EXPECT_NEAR(linalg::unitarity_defect(a), oracle::unitarity(a), 1e-13);
}

TEST(AllFinite, DetectsNan) {
  CMatrix a = CMatrix::Identity(2, 2);
  EXPECT_TRUE(linalg::all_finite(a));
  a(1, 0) = Complex(0, std::numeric_limits<double>::quiet_NaN());
  EXPECT_FALSE(linalg::all_finite(a));
}
