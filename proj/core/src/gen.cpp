#include "symlog/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "symlog/error.hpp"
#include "symlog/rng.hpp"

namespace symlog {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd unit_phases(const RVector& phases, double p) {
  return (Complex(0.0, p) * phases.cast<Complex>()).array().exp();
}

// [[C, -S], [S, C]] for the angles in `thetas`.
CMatrix rotation_blocks(const RVector& thetas) {
  const Eigen::Index h = thetas.size();
  CMatrix r = CMatrix::Zero(2 * h, 2 * h);
  for (Eigen::Index j = 0; j < h; ++j) {
    const double c = std::cos(thetas(j));
    const double s = std::sin(thetas(j));
    r(j, j) = c;
    r(j + h, j + h) = c;
    r(j, j + h) = -s;
    r(j + h, j) = s;
  }
  return r;
}

CMatrix block_frame(Rng& rng, Eigen::Index n) {
  const Eigen::Index h = n / 2;
  CMatrix frame = CMatrix::Zero(n, n);
  frame.topLeftCorner(h, h) = rng.haar_unitary(h);
  frame.bottomRightCorner(h, h) = rng.haar_unitary(h);
  return frame;
}

void validate(SymmetryClass cls, Eigen::Index n, const GapSpec& spec) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (requires_even_dimension(cls) && n % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "class " + std::string(to_string(cls)) + " needs an even dimension");
  }
  if (!(spec.gap > 0.0) || !(spec.gap < kPi)) throw Error(ErrorCode::InvalidArgument, "gap must lie in (0, pi)");
  if (spec.pinned < 2 || spec.pinned % 2 != 0 || spec.pinned > n) {
    throw Error(ErrorCode::InvalidArgument, "pinned must be even, >= 2 and <= n");
  }
}

// `count` phases uniform on (-pi + gap, pi - gap); the first `pinned` slots are
// overwritten, alternating +(pi - gap) and -(pi - gap).
RVector draw_phases(Rng& rng, Eigen::Index count, int pinned, double gap) {
  const double edge = kPi - gap;
  RVector phases(count);
  for (Eigen::Index i = 0; i < count; ++i) phases(i) = rng.uniform(-edge, edge);
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(pinned, count); ++i) phases(i) = (i % 2 == 0) ? edge : -edge;
  return phases;
}

}  // namespace

CMatrix SpectralConstruction::power(double p) const {
  if (cls == SymmetryClass::ChiralAIII) return frame * rotation_blocks(p * phases) * frame.adjoint();
  return frame * unit_phases(phases, p).asDiagonal() * frame.adjoint();
}

CMatrix SpectralConstruction::principal_log() const {
  if (cls == SymmetryClass::ChiralAIII) {
    const Eigen::Index h = phases.size();
    CMatrix k = CMatrix::Zero(2 * h, 2 * h);
    for (Eigen::Index j = 0; j < h; ++j) {
      k(j, j + h) = -phases(j);
      k(j + h, j) = phases(j);
    }
    return frame * k * frame.adjoint();
  }
  return frame * (Complex(0.0, 1.0) * phases.cast<Complex>()).asDiagonal() * frame.adjoint();
}

RVector SpectralConstruction::eigenphases() const {
  RVector all;
  if (cls == SymmetryClass::ChiralAIII) {
    all.resize(2 * phases.size());
    all << -phases, phases;
  } else {
    all = phases;
  }
  std::sort(all.begin(), all.end());
  return all;
}

SpectralConstruction random_gapped_construction(SymmetryClass cls, Eigen::Index n, const GapSpec& spec,
                                                std::uint64_t seed) {
  validate(cls, n, spec);
  Rng rng(seed);
  SpectralConstruction c;
  c.cls = cls;
  switch (cls) {
    case SymmetryClass::GenericA:
      c.frame = rng.haar_unitary(n);
      c.phases = draw_phases(rng, n, spec.pinned, spec.gap);
      break;
    case SymmetryClass::SymmetricAI:
      c.frame = rng.haar_orthogonal(n).cast<Complex>();
      c.phases = draw_phases(rng, n, spec.pinned, spec.gap);
      break;
    case SymmetryClass::SelfDualAII: {
      const SymmetryContext ctx(n);
      const CMatrix k = rng.hermitian(n);
      const linalg::HermitianEigen eig = linalg::eigh(0.5 * (k + dual(k, ctx)));
      c.frame = eig.vectors;
      // Eigenvalues come in adjacent degenerate pairs; each pair shares a phase.
      const RVector pair_phases = draw_phases(rng, n / 2, spec.pinned / 2, spec.gap);
      c.phases.resize(n);
      for (Eigen::Index j = 0; j < n / 2; ++j) {
        c.phases(2 * j) = pair_phases(j);
        c.phases(2 * j + 1) = pair_phases(j);
      }
      break;
    }
    case SymmetryClass::ChiralAIII:
      c.frame = block_frame(rng, n);
      c.phases = draw_phases(rng, n / 2, 0, spec.gap);
      for (int j = 0; j < spec.pinned / 2; ++j) c.phases(j) = kPi - spec.gap;
      break;
  }
  return c;
}

CMatrix random_gapped_unitary(SymmetryClass cls, Eigen::Index n, const GapSpec& spec, std::uint64_t seed,
                              bool via_squared_root) {
  const SpectralConstruction c = random_gapped_construction(cls, n, spec, seed);
  CMatrix u;
  if (via_squared_root) {
    const CMatrix root = c.principal_sqrt();
    u = root * root;
  } else {
    u = c.unitary();
  }
  if (cls == SymmetryClass::SymmetricAI || cls == SymmetryClass::SelfDualAII || cls == SymmetryClass::ChiralAIII) {
    u = enforce_unitary_symmetry(u, cls, SymmetryContext(n));
  }
  return u;
}

CMatrix aiii_obstructed_unitary(Eigen::Index n, std::uint64_t seed) {
  if (n <= 0 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "aiii_obstructed_unitary: n must be even");
  const Eigen::Index h = n / 2;
  Rng rng(seed);
  const CMatrix frame = block_frame(rng, n);
  RVector thetas(h);
  for (Eigen::Index j = 0; j < h; ++j) thetas(j) = rng.uniform(-kPi + 0.1, kPi - 0.1);
  CMatrix d = rotation_blocks(thetas);
  // Pair (0, h) becomes diag(+1, -1): U Gamma restricted there is the identity.
  d(0, 0) = 1.0;
  d(h, h) = -1.0;
  d(0, h) = 0.0;
  d(h, 0) = 0.0;
  return enforce_unitary_symmetry(frame * d * frame.adjoint(), SymmetryClass::ChiralAIII, SymmetryContext(n));
}

DriveSpec random_symmetric_drive(SymmetryClass cls, Eigen::Index n, int steps, double period, std::uint64_t seed) {
  if (n <= 0 || steps < 1 || !(period > 0.0)) throw Error(ErrorCode::InvalidArgument, "random_symmetric_drive");
  if (cls == SymmetryClass::SelfDualAII) {
    throw Error(ErrorCode::UnsupportedClass, "random_symmetric_drive: class AII drives are not provided");
  }
  if (cls == SymmetryClass::ChiralAIII && n % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "random_symmetric_drive: AIII needs an even dimension");
  }
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix h0 = scale * rng.hermitian(n);
  CMatrix h1 = scale * rng.hermitian(n);
  CMatrix h2 = scale * rng.hermitian(n);
  const Eigen::Index half = n / 2;
  auto make_odd = [half](CMatrix& m) {
    m.topLeftCorner(half, half).setZero();
    m.bottomRightCorner(half, half).setZero();
  };
  switch (cls) {
    case SymmetryClass::SymmetricAI:
      h0 = h0.real().cast<Complex>();
      h1 = h1.real().cast<Complex>();
      h2 = Complex(0.0, 1.0) * h2.imag().cast<Complex>();  // i times real antisymmetric
      break;
    case SymmetryClass::ChiralAIII:
      make_odd(h0);
      make_odd(h1);
      h2.topRightCorner(half, half).setZero();
      h2.bottomLeftCorner(half, half).setZero();
      break;
    default: break;
  }
  DriveSpec drive;
  drive.period = period;
  drive.declared_symmetry = cls;
  drive.hamiltonians.reserve(static_cast<std::size_t>(steps));
  for (int j = 1; j <= steps; ++j) {
    const double w = 2.0 * kPi * static_cast<double>(j) / steps;
    drive.hamiltonians.push_back(h0 + std::cos(w) * h1 + std::sin(w) * h2);
  }
  return drive;
}

CMatrix floquet_operator(const DriveSpec& drive) {
  if (drive.hamiltonians.empty()) throw Error(ErrorCode::InvalidArgument, "floquet_operator: no samples");
  if (!(drive.period > 0.0)) throw Error(ErrorCode::InvalidArgument, "floquet_operator: period must be positive");
  const Eigen::Index n = drive.hamiltonians.front().rows();
  const double dt = drive.period / static_cast<double>(drive.steps());
  CMatrix u = CMatrix::Identity(n, n);
  CMatrix next(n, n);
  for (std::size_t j = 0; j < drive.steps(); ++j) {
    const CMatrix& h = drive.hamiltonians[j];
    linalg::require_square(h, "floquet_operator");
    if (h.rows() != n) throw Error(ErrorCode::DimensionMismatch, "floquet_operator: samples differ in size");
    const double skew = (h - h.adjoint()).norm();
    if (skew > 1e-13 * std::max(1.0, h.norm())) {
      throw Error(ErrorCode::NotHermitian, "floquet_operator: sample " + std::to_string(j + 1) + " is not Hermitian");
    }
    const linalg::HermitianEigen eig = linalg::eigh(h);
    const Eigen::VectorXcd phases = (Complex(0.0, -dt) * eig.values.cast<Complex>()).array().exp();
    const CMatrix step = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
    next.noalias() = step * u;
    u.swap(next);
  }
  return u;
}

}  // namespace symlog
