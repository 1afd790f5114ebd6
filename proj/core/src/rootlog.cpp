#include "symlog/rootlog.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "symlog/error.hpp"
#include "symlog/rng.hpp"

namespace symlog {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_input(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx, const SqrtOptions& opts,
                 const char* what) {
  ctx.check(u, cls, what);
  if (!u.allFinite()) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite input");
  const ResidualReport rep = residual(u, cls, ctx);
  if (rep.unitarity > opts.input_tol || rep.symmetry > opts.input_tol) {
    throw Error(ErrorCode::NotNearlyUnitary, std::string(what) + ": unitarity " + std::to_string(rep.unitarity) +
                                                 ", class defect " + std::to_string(rep.symmetry));
  }
  if (cls == SymmetryClass::ChiralAIII && opts.check_index) {
    const int index = aiii_index(u, ctx, IndexOptions{.residual_tol = opts.input_tol});
    if (index != 0) {
      throw Error(ErrorCode::ObstructionDetected, std::string(what) + ": chiral index " + std::to_string(index));
    }
  }
}

CMatrix polar_step(const CMatrix& v) {
  try {
    return unitarize_step(v);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) throw Error(ErrorCode::SingularIteration, e.what());
    throw;
  }
}

}  // namespace

CoupledPair coupled_step(const CMatrix& y, const CMatrix& z) {
  linalg::require_square(y, "coupled_step");
  linalg::require_square(z, "coupled_step");
  if (y.rows() != z.rows()) throw Error(ErrorCode::DimensionMismatch, "coupled_step: y and z differ in size");
  const Eigen::Index n = y.rows();

  CMatrix shifted(n, n);
  shifted.noalias() = 3.0 * (z * y);
  shifted.diagonal().array() += 1.0;
  CMatrix c;
  try {
    c = linalg::inverse(shifted);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) {
      throw Error(ErrorCode::SingularIteration, "I + 3 z y is singular; spectrum at or near -1");
    }
    throw;
  }
  c *= 8.0;
  c.diagonal().array() += 1.0;
  c /= 3.0;

  CoupledPair next{CMatrix(n, n), CMatrix(n, n)};
  next.y.noalias() = y * c;
  next.z.noalias() = c * z;
  return next;
}

CMatrix sqrt_structured(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx, const SqrtOptions& opts) {
  if (opts.max_iters < 1) throw Error(ErrorCode::InvalidArgument, "sqrt: max_iters must be >= 1");
  if (opts.conv_tol < 0.0) throw Error(ErrorCode::InvalidArgument, "sqrt: conv_tol must be positive");
  if (opts.enforce_every < 1) throw Error(ErrorCode::InvalidArgument, "sqrt: enforce_every must be >= 1");
  check_input(u, cls, ctx, opts, "sqrt_structured");

  const Eigen::Index n = u.rows();
  const double tol = opts.conv_tol > 0.0 ? opts.conv_tol : 10.0 * static_cast<double>(n) * kEps;
  const bool corrected = opts.variant == SqrtVariant::Corrected;

  CoupledPair it{u, linalg::identity(n)};
  double previous_change = std::numeric_limits<double>::infinity();
  bool settled = false;
  int rises = 0;

  for (int k = 1; k <= opts.max_iters; ++k) {
    if (opts.stop.stop_requested()) throw Error(ErrorCode::Cancelled, "sqrt_structured");

    const CMatrix y_prev = it.y;
    it = coupled_step(it.y, it.z);
    if (corrected && k % opts.enforce_every == 0) {
      it.y = enforce_unitary_symmetry(polar_step(it.y), cls, ctx);
      it.z = enforce_unitary_symmetry(polar_step(it.z), cls, ctx);
    }
    if (!it.y.allFinite() || !it.z.allFinite()) {
      throw Error(ErrorCode::SingularIteration, "sqrt_structured: iterate lost finiteness");
    }

    const double change = (it.y - y_prev).norm() / it.y.norm();
    if (opts.trace != nullptr) {
      opts.trace->push_back({k, change, linalg::unitarity_defect(it.y)});
    }
    if (change <= tol) return it.y;

    // Stagnation at rounding level: once the change has dropped below 1e-8,
    // two consecutive increases end the iteration.
    if (change < 1e-8) settled = true;
    if (settled && change > previous_change) {
      if (++rises >= 2) return it.y;
    } else {
      rises = 0;
    }
    previous_change = change;
  }
  throw Error(ErrorCode::MaxIterationsExceeded,
              "sqrt_structured: no convergence in " + std::to_string(opts.max_iters) + " iterations");
}

StructuredLog log_structured(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx, const LogOptions& opts) {
  if (opts.root_count < 0 || opts.root_count > 30) {
    throw Error(ErrorCode::InvalidArgument, "log: root_count must be in [0, 30]");
  }
  if (opts.pade_order < 1) throw Error(ErrorCode::InvalidArgument, "log: pade_order must be >= 1");
  check_input(u, cls, ctx, opts.sqrt, "log_structured");

  SqrtOptions root_opts = opts.sqrt;
  root_opts.check_index = false;  // roots of an index-zero unitary keep index zero
  CMatrix r = u;
  for (int k = 0; k < opts.root_count; ++k) r = sqrt_structured(r, cls, ctx, root_opts);

  r.diagonal().array() -= 1.0;
  CMatrix h = enforce_log_symmetry(pade_log(r, opts.pade_order), cls, ctx);
  h *= std::ldexp(1.0, opts.root_count);
  return {std::move(h), cls};
}

CMatrix floquet_hamiltonian(const CMatrix& u, double period, SymmetryClass cls, const SymmetryContext& ctx,
                            const LogOptions& opts) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw Error(ErrorCode::InvalidArgument, "floquet_hamiltonian: period must be positive");
  }
  const StructuredLog log = log_structured(u, cls, ctx, opts);
  const Eigen::Index n = u.rows();
  CMatrix hf(n, n);
  // (i / T)(x + i y) = (-y + i x) / T, written out so Hermiticity is exact.
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex a = log.h_anti(i, j);
      hf(i, j) = Complex(-a.imag() / period, a.real() / period);
    }
  if (cls == SymmetryClass::SymmetricAI) hf = hf.real().cast<Complex>();
  return hf;
}

CMatrix nudge(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx, double eps, std::uint64_t seed) {
  ctx.check(u, cls, "nudge");
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "nudge: eps must be >= 0");
  const Eigen::Index n = u.rows();
  Rng rng(seed);
  CMatrix k = rng.hermitian(n);
  switch (cls) {
    case SymmetryClass::GenericA: break;
    case SymmetryClass::SymmetricAI: k = k.real().cast<Complex>(); break;
    case SymmetryClass::SelfDualAII: k = 0.5 * (k + dual(k, ctx)); break;
    case SymmetryClass::ChiralAIII:
      k.topLeftCorner(n / 2, n / 2).setZero();
      k.bottomRightCorner(n / 2, n / 2).setZero();
      break;
  }
  k /= linalg::spectral_norm(k);
  const linalg::HermitianEigen eig = linalg::eigh(k);
  const Eigen::VectorXcd phases = (Complex(0.0, -0.5 * eps) * eig.values.cast<Complex>()).array().exp();
  const CMatrix w = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  return enforce_unitary_symmetry(w * u * w, cls, ctx);
}

}  // namespace symlog
