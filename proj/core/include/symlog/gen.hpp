#pragma once

#include <cstdint>
#include <vector>

#include "symlog/linalg.hpp"
#include "symlog/symmetry.hpp"

namespace symlog {

/// Gap at -1: `gap` is the arc distance from -1 to the nearest eigenvalue,
/// and `pinned` eigenvalues sit exactly at that distance (half at
/// +(pi - gap), half at -(pi - gap)).
struct GapSpec {
  double gap = 1e-2;
  int pinned = 4;
};

/// A unitary whose spectral decomposition is known by construction.
///
/// A, AI, AII:  U = frame diag(exp(i phases)) frame^H, phases of length n.
///              For AI the frame is real orthogonal; for AII the phases come
///              in equal pairs (Kramers degeneracy).
/// AIII:        U = frame R(thetas) frame^H with frame = diag(Q1, Q2) and
///              R(theta) = [[C, -S], [S, C]], C = diag(cos theta_j),
///              S = diag(sin theta_j); `phases` holds the n/2 angles theta_j
///              and the spectrum is {exp(+-i theta_j)}.
struct SpectralConstruction {
  SymmetryClass cls = SymmetryClass::GenericA;
  CMatrix frame;
  RVector phases;

  Eigen::Index n() const { return frame.rows(); }

  /// U^p on the principal branch: each phase multiplied by p.
  CMatrix power(double p) const;
  CMatrix unitary() const { return power(1.0); }
  CMatrix principal_sqrt() const { return power(0.5); }
  /// Anti-Hermitian principal logarithm.
  CMatrix principal_log() const;
  /// All n eigenphases of U, ascending.
  RVector eigenphases() const;
};

/// Seeded structured unitary with a prescribed gap at -1. Phases are drawn
/// uniformly from (-pi + gap, pi - gap) before pinning.
///   A    frame Haar unitary.
///   AI   frame Haar real orthogonal, so U^T = U.
///   AII  frame from the eigenvectors of a random self-dual Hermitian matrix,
///        phases assigned per Kramers pair; the result is symmetrized.
///   AIII block construction above with Q1, Q2 Haar on n/2.
/// Throws InvalidArgument on a bad spec.
SpectralConstruction random_gapped_construction(SymmetryClass cls, Eigen::Index n, const GapSpec& spec,
                                                std::uint64_t seed);

/// The unitary of random_gapped_construction. With `via_squared_root` the
/// principal square root is formed first and the returned matrix is its
/// square computed in floating point.
CMatrix random_gapped_unitary(SymmetryClass cls, Eigen::Index n, const GapSpec& spec, std::uint64_t seed,
                              bool via_squared_root = false);

/// Chiral unitary with nonzero index: frame diag(Q1, Q2) applied to a
/// diagonal-block matrix whose first graded pair is (+1, -1) (index +1) and
/// whose other pairs are rotations R(theta). For n = 2 this is Gamma itself.
CMatrix aiii_obstructed_unitary(Eigen::Index n, std::uint64_t seed);

/// Piecewise-constant drive sampled over one period. Sample j (1-based)
/// is H(j T / M); the Floquet operator is the time-ordered product of
/// exp(-i (T / M) H_j) with the latest sample leftmost.
struct DriveSpec {
  std::vector<CMatrix> hamiltonians;
  double period = 1.0;
  SymmetryClass declared_symmetry = SymmetryClass::GenericA;

  std::size_t steps() const { return hamiltonians.size(); }
};

/// Smooth random drive H(t) = H0 + cos(2 pi t / T) H1 + sin(2 pi t / T) H2
/// with coefficient matrices chosen so that
///   AI:   H(T - t) = conj(H(t))
///   AIII: Gamma H(t) Gamma = -H(-t)
/// and sampled at M = `steps` points. Class A uses generic Hermitian terms.
DriveSpec random_symmetric_drive(SymmetryClass cls, Eigen::Index n, int steps, double period, std::uint64_t seed);

/// First-order product formula. Throws NotHermitian on a non-Hermitian sample.
CMatrix floquet_operator(const DriveSpec& drive);

}  // namespace symlog
