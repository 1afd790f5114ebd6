#pragma once

#include "symlog/linalg.hpp"
#include "symlog/rootlog.hpp"
#include "symlog/symmetry.hpp"

namespace symlog {

/// U ~= q diag(exp(i phases)) q^H with q unitary and carrying the class
/// structure:
///   SymmetricAI  q is real orthogonal.
///   ChiralAIII   Gamma q_j = q_{j + n/2} and phases_j = -phases_{j + n/2}
///                for j < n/2.
/// Eigenvalues exp(i phases) lie on the unit circle by construction.
struct DiagResult {
  CMatrix q;
  RVector phases;
  SymmetryClass cls = SymmetryClass::GenericA;
};

/// Structured diagonalization through the structured logarithm: with
/// H = -i log U, diagonalize H (Hermitian, real symmetric for AI, Gamma-odd
/// for AIII via the SVD of its top-right block) and read phases off H.
///
/// Phase order: ascending for A and AI. For AIII the first n/2 phases are
/// -s_1 <= ... <= -s_{n/2} for singular values s descending, the last n/2 are
/// s_1 >= ... >= s_{n/2}, so slot j pairs with slot j + n/2.
///
/// Class AII is rejected with UnsupportedClass.
DiagResult diag_structured(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx,
                           const LogOptions& opts = {});

/// Second half of diag_structured for an already computed structured log.
DiagResult diagonalize_log(const StructuredLog& log, const SymmetryContext& ctx);

CMatrix reconstruct(const DiagResult& res);

}  // namespace symlog
