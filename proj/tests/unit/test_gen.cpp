#include <gtest/gtest.h>

#include <numbers>
#include <set>

#include "oracles.hpp"
#include "symlog/error.hpp"
#include "symlog/gen.hpp"
#include "symlog/rng.hpp"
#include "symlog/symmetry.hpp"

using namespace symlog;
using std::numbers::pi;

namespace {

constexpr SymmetryClass kAll[] = {SymmetryClass::GenericA, SymmetryClass::SymmetricAI, SymmetryClass::SelfDualAII,
                                  SymmetryClass::ChiralAIII};

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

// Arc distance from -1 to the nearest eigenphase.
double arc_gap(const RVector& phases) { return pi - phases.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  EXPECT_EQ(stream_seed(7, 3), stream_seed(7, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(stream_seed(7, t));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(stream_seed(7, 0), stream_seed(8, 0));
  Rng a(5), b(5);
  EXPECT_EQ(a.ginibre(4), b.ginibre(4));
}

TEST(Rng, SplitMixReferenceValue) {
  // First output of the reference splitmix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Rng, HaarSamplesAreUnitary) {
  Rng rng(1);
  EXPECT_LE(oracle::unitarity(rng.haar_unitary(9)), 1e-14);
  const RMatrix o = rng.haar_orthogonal(9);
  EXPECT_LE((o.transpose() * o - RMatrix::Identity(9, 9)).norm(), 1e-14);
  const CMatrix h = rng.hermitian(5);
  EXPECT_EQ(CMatrix(h.adjoint()), h);
}

TEST(RandomGapped, PinningConsumesAllPhases) {
  const auto con = random_gapped_construction(SymmetryClass::GenericA, 2, GapSpec{pi / 2, 2}, 1);
  EXPECT_LE(oracle::sorted_distance(con.eigenphases(), Eigen::Vector2d(-pi / 2, pi / 2)), 1e-15);
  EXPECT_LE(oracle::sorted_distance(oracle::eigenphases(con.unitary()), Eigen::Vector2d(-pi / 2, pi / 2)), 1e-14);
}

TEST(RandomGapped, SymmetricSmallGap) {
  const auto con = random_gapped_construction(SymmetryClass::SymmetricAI, 8, GapSpec{1e-3, 4}, 1);
  const CMatrix u = random_gapped_unitary(SymmetryClass::SymmetricAI, 8, GapSpec{1e-3, 4}, 1);
  const auto r = residual(u, SymmetryClass::SymmetricAI, SymmetryContext(8));
  EXPECT_LE(r.unitarity, 1e-14);
  EXPECT_LE(r.symmetry, 1e-14);
  EXPECT_NEAR(arc_gap(con.eigenphases()), 1e-3, 1e-12);
  EXPECT_EQ(con.frame.imag().cwiseAbs().maxCoeff(), 0.0);
}

TEST(RandomGapped, ChiralHasZeroIndex) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CMatrix u = random_gapped_unitary(SymmetryClass::ChiralAIII, 8, GapSpec{0.3, 2}, seed);
    EXPECT_EQ(aiii_index(u, SymmetryContext(8)), 0);
  }
}

TEST(RandomGapped, ResidualsAndSpectrumPlacement) {
  for (SymmetryClass c : kAll)
    for (double gap : {1e-1, 1e-6, 1e-12}) {
      const Eigen::Index n = 12;
      const CMatrix u = random_gapped_unitary(c, n, GapSpec{gap, 4}, 3);
      const auto r = residual(u, c, SymmetryContext(n));
      EXPECT_LE(r.unitarity, 1e-13) << to_string(c);
      EXPECT_LE(r.symmetry, 1e-13) << to_string(c);
      const double measured = pi - oracle::eigenphases(u).cwiseAbs().maxCoeff();
      // The generic solver resolves the phase near pi to about n eps.
      EXPECT_NEAR(measured, gap, std::max(1e-10 * gap, 1e-13)) << to_string(c) << " gap " << gap;
    }
}

TEST(RandomGapped, ConstructionOraclesAreConsistent) {
  for (SymmetryClass c : kAll) {
    const auto con = random_gapped_construction(c, 8, GapSpec{1e-2, 4}, 4);
    EXPECT_LE(oracle::sorted_distance(oracle::eigenphases(con.unitary()), con.eigenphases()), 1e-12);
    const CMatrix root = con.principal_sqrt();
    EXPECT_LE(oracle::spectral_norm(root * root - con.unitary()), 1e-14);
    EXPECT_LE(oracle::spectral_norm(oracle::exp_antihermitian(con.principal_log()) - con.unitary()), 1e-13);
  }
}

TEST(RandomGapped, SquaredRootProtocol) {
  const auto con = random_gapped_construction(SymmetryClass::GenericA, 6, GapSpec{1e-2, 2}, 2);
  const CMatrix root = con.principal_sqrt();
  const CMatrix u = random_gapped_unitary(SymmetryClass::GenericA, 6, GapSpec{1e-2, 2}, 2, true);
  EXPECT_EQ(u, CMatrix(root * root));
}

TEST(RandomGapped, BitIdenticalForSameSeed) {
  for (SymmetryClass c : kAll)
    EXPECT_EQ(random_gapped_unitary(c, 10, GapSpec{1e-3, 4}, 99), random_gapped_unitary(c, 10, GapSpec{1e-3, 4}, 99));
  EXPECT_NE(random_gapped_unitary(SymmetryClass::GenericA, 4, GapSpec{}, 1),
            random_gapped_unitary(SymmetryClass::GenericA, 4, GapSpec{}, 2));
}

TEST(RandomGapped, ValidatesSpec) {
  EXPECT_EQ(code_of([] { random_gapped_unitary(SymmetryClass::GenericA, 4, GapSpec{0.0, 2}, 1); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { random_gapped_unitary(SymmetryClass::GenericA, 4, GapSpec{pi, 2}, 1); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { random_gapped_unitary(SymmetryClass::GenericA, 4, GapSpec{0.1, 3}, 1); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { random_gapped_unitary(SymmetryClass::GenericA, 4, GapSpec{0.1, 6}, 1); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { random_gapped_unitary(SymmetryClass::ChiralAIII, 5, GapSpec{0.1, 2}, 1); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { random_gapped_unitary(SymmetryClass::GenericA, 0, GapSpec{0.1, 2}, 1); }),
            ErrorCode::InvalidArgument);
}

TEST(Obstructed, TwoByTwoIsGamma) {
  const SymmetryContext ctx(2);
  EXPECT_LE((aiii_obstructed_unitary(2, 5) - ctx.gamma()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(aiii_index(aiii_obstructed_unitary(2, 5), ctx), 1);
}

TEST(Obstructed, NonzeroIndexAndChiral) {
  for (Eigen::Index n : {4, 8, 16})
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const CMatrix u = aiii_obstructed_unitary(n, seed);
      const SymmetryContext ctx(n);
      const auto r = residual(u, SymmetryClass::ChiralAIII, ctx);
      EXPECT_LE(r.unitarity, 1e-13);
      EXPECT_LE(r.symmetry, 1e-13);
      EXPECT_NE(aiii_index(u, ctx), 0);
    }
  EXPECT_EQ(code_of([] { aiii_obstructed_unitary(3, 1); }), ErrorCode::InvalidArgument);
}

TEST(FloquetOperator, ConstantDriveIsSingleExponential) {
  const CMatrix h0 = oracle::random_hermitian(5, 3);
  DriveSpec drive{std::vector<CMatrix>(16, h0), 1.0, SymmetryClass::GenericA};
  const CMatrix want = oracle::exp_antihermitian(Complex(0, -1) * h0);
  EXPECT_LE(oracle::spectral_norm(floquet_operator(drive) - want), 1e-14);
}

TEST(FloquetOperator, LatestFactorLeftmost) {
  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a << 0, 1, 1, 0;
  b << 1, 0, 0, -1;
  DriveSpec drive{{a, b}, 2.0, SymmetryClass::GenericA};
  const CMatrix want =
      oracle::exp_antihermitian(Complex(0, -1) * b) * oracle::exp_antihermitian(Complex(0, -1) * a);
  EXPECT_LE(oracle::spectral_norm(floquet_operator(drive) - want), 1e-15);
}

TEST(FloquetOperator, RejectsNonHermitianSample) {
  CMatrix a(2, 2);
  a << 0, 1, 0, 0;
  DriveSpec drive{{a}, 1.0, SymmetryClass::GenericA};
  EXPECT_EQ(code_of([&] { floquet_operator(drive); }), ErrorCode::NotHermitian);
}

TEST(SymmetricDrive, SampleRelations) {
  const int m = 40;
  const Eigen::Index n = 6;
  const CMatrix g = oracle::gamma(n);
  const auto ai = random_symmetric_drive(SymmetryClass::SymmetricAI, n, m, 1.0, 3);
  const auto aiii = random_symmetric_drive(SymmetryClass::ChiralAIII, n, m, 1.0, 3);
  ASSERT_EQ(ai.steps(), std::size_t(m));
  // Sample j (1-based) is H(jT/M), so H(T - t_j) is sample M - j and H(T) = H(0).
  for (int j = 1; j < m; ++j) {
    const CMatrix& hj = ai.hamiltonians[j - 1];
    EXPECT_LE((ai.hamiltonians[m - j - 1] - hj.conjugate()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((hj - hj.adjoint()).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LE((g * aiii.hamiltonians[j - 1] * g + aiii.hamiltonians[m - j - 1]).cwiseAbs().maxCoeff(), 1e-14);
  }
  EXPECT_LE(ai.hamiltonians[m - 1].imag().cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((g * aiii.hamiltonians[m - 1] * g + aiii.hamiltonians[m - 1]).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(SymmetricDrive, ResidualDecaysLikeOneOverM) {
  for (SymmetryClass c : {SymmetryClass::SymmetricAI, SymmetryClass::ChiralAIII}) {
    std::vector<double> ms, res;
    for (int m : {100, 200, 400}) {
      const CMatrix u = floquet_operator(random_symmetric_drive(c, 8, m, 1.0, 11));
      const auto r = residual(u, c, SymmetryContext(8));
      EXPECT_LE(r.unitarity, double(m) * 8 * std::numeric_limits<double>::epsilon() * 10);
      ms.push_back(m);
      res.push_back(r.symmetry);
    }
    EXPECT_NEAR(oracle::loglog_slope(ms, res), -1.0, 0.3) << to_string(c);
  }
}

TEST(SymmetricDrive, SelfDualUnsupported) {
  EXPECT_EQ(code_of([] { random_symmetric_drive(SymmetryClass::SelfDualAII, 4, 10, 1.0, 1); }),
            ErrorCode::UnsupportedClass);
}
