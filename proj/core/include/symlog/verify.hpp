#pragma once

#include "symlog/linalg.hpp"
#include "symlog/specfact.hpp"
#include "symlog/symmetry.hpp"

namespace symlog::verify {

/// exp(h) for anti-Hermitian h through the Hermitian eigendecomposition of
/// -i h. Independent of the square-root and Pade code paths.
CMatrix expm_antihermitian(const CMatrix& h);

/// exp(-i t h) for Hermitian h.
CMatrix expm_hermitian(const CMatrix& h, double t);

/// ||h + h^H||_2.
double antihermitian_defect(const CMatrix& h);

/// Largest |Im| entry.
double max_imag(const CMatrix& m);

/// Arc distance from -1 to the spectrum of u, using a generic (non-Hermitian)
/// eigensolver.
double arc_gap_at_minus_one(const CMatrix& u);

/// ||u q - q diag(exp(i phases))||_2.
double eigen_residual(const CMatrix& u, const DiagResult& res);

/// max_j ||Gamma q_j - q_{j+n/2}||_2 and max_j |phases_j + phases_{j+n/2}|.
struct PairingDefect {
  double vectors = 0.0;
  double phases = 0.0;
};
PairingDefect aiii_pairing_defect(const DiagResult& res);

/// Largest difference between two sorted phase lists.
double phase_multiset_distance(RVector a, RVector b);

}  // namespace symlog::verify
