#pragma once

#include <cstdint>
#include <stop_token>
#include <utility>
#include <vector>

#include "symlog/linalg.hpp"
#include "symlog/symmetry.hpp"

namespace symlog {

// ---------------------------------------------------------------------------
// Square root
// ---------------------------------------------------------------------------

enum class SqrtVariant {
  /// Coupled iteration with a polar Newton step and symmetry averaging
  /// applied to both iterates.
  Corrected,
  /// The bare coupled iteration. Drifts off the unitary group on inputs with
  /// spectrum near -1; kept for comparison experiments.
  Uncorrected,
};

struct SqrtIterate {
  int iteration = 0;
  double relative_change = 0.0;  // ||Y - Y_prev||_F / ||Y||_F
  double unitarity = 0.0;        // ||Y^H Y - I||_2, only filled when tracing
};

struct SqrtOptions {
  int max_iters = 50;
  /// Relative Frobenius change that counts as converged; 0 selects 10 n eps.
  double conv_tol = 0.0;
  /// Apply the correction every this many iterations.
  int enforce_every = 1;
  SqrtVariant variant = SqrtVariant::Corrected;
  /// Input acceptance: unitarity and class defect must both be below this.
  double input_tol = 1e-6;
  /// Skip the chiral index gate (used internally for repeated roots).
  bool check_index = true;
  std::stop_token stop = {};
  /// When set, receives one record per iteration.
  std::vector<SqrtIterate>* trace = nullptr;
};

struct CoupledPair {
  CMatrix y;
  CMatrix z;
};

/// One step of the cubically convergent coupled square-root iteration:
///   C = (I + 8 (I + 3 z y)^{-1}) / 3,  y' = y C,  z' = C z.
/// Throws SingularIteration if I + 3 z y fails the pivot test.
CoupledPair coupled_step(const CMatrix& y, const CMatrix& z);

/// Principal square root of a (nearly) unitary matrix that stays unitary and
/// keeps the class relation of the input exactly.
///
/// Errors: NotNearlyUnitary, ObstructionDetected (chiral index != 0),
/// MaxIterationsExceeded, SingularIteration, Cancelled.
CMatrix sqrt_structured(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx,
                        const SqrtOptions& opts = {});

// ---------------------------------------------------------------------------
// Logarithm
// ---------------------------------------------------------------------------

struct QuadratureRule {
  std::vector<double> nodes;    // in (0, 1), ascending
  std::vector<double> weights;  // positive, sum to 1
};

/// Gauss-Legendre rule with `order` points mapped to [0, 1].
QuadratureRule gauss_legendre_unit(int order);

/// Scalar [order/order] Pade approximant of log(1 + x), evaluated as the
/// partial-fraction sum  sum_j w_j x / (1 + t_j x).
Complex pade_log1p(Complex x, int order = 7);

/// Matrix version of pade_log1p. Requires ||x||_2 < 0.5 (NormTooLarge).
CMatrix pade_log(const CMatrix& x, int order = 7);

struct LogOptions {
  int root_count = 5;
  int pade_order = 7;
  SqrtOptions sqrt = {};
};

/// Anti-Hermitian principal logarithm carrying its symmetry class.
struct StructuredLog {
  CMatrix h_anti;
  SymmetryClass cls = SymmetryClass::GenericA;
};

/// Inverse scaling and squaring: take root_count structured square roots,
/// apply the Pade approximant, project onto anti-Hermitian matrices with the
/// class relation, then rescale by 2^root_count.
StructuredLog log_structured(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx,
                             const LogOptions& opts = {});

/// Floquet effective Hamiltonian H_F = (i / period) log U, so that
/// exp(-i period H_F) = U. Hermitian exactly; real for class AI; Gamma-odd
/// for class AIII.
CMatrix floquet_hamiltonian(const CMatrix& u, double period, SymmetryClass cls, const SymmetryContext& ctx,
                            const LogOptions& opts = {});

/// Returns W u W with W = exp(-i eps K / 2) for a random Hermitian K drawn
/// from the class-compatible subspace, which keeps the class relation while
/// moving the spectrum slightly. Used to dislodge eigenvalues sitting at -1.
CMatrix nudge(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx, double eps, std::uint64_t seed);

}  // namespace symlog
