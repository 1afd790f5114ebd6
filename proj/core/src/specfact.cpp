#include "symlog/specfact.hpp"

#include <cmath>

#include "symlog/error.hpp"

namespace symlog {

DiagResult diag_structured(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx, const LogOptions& opts) {
  if (cls == SymmetryClass::SelfDualAII) {
    throw Error(ErrorCode::UnsupportedClass, "diag_structured: no structured eigensolver for class AII");
  }
  return diagonalize_log(log_structured(u, cls, ctx, opts), ctx);
}

DiagResult diagonalize_log(const StructuredLog& log, const SymmetryContext& ctx) {
  const SymmetryClass cls = log.cls;
  if (cls == SymmetryClass::SelfDualAII) {
    throw Error(ErrorCode::UnsupportedClass, "diagonalize_log: no structured eigensolver for class AII");
  }
  ctx.check(log.h_anti, cls, "diagonalize_log");
  const Eigen::Index n = log.h_anti.rows();

  // H = -i L, so exp(i H) = exp(L) = U.
  CMatrix h(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex a = log.h_anti(i, j);
      h(i, j) = Complex(a.imag(), -a.real());
    }

  DiagResult res;
  res.cls = cls;
  switch (cls) {
    case SymmetryClass::GenericA: {
      linalg::HermitianEigen eig = linalg::eigh(h);
      res.q = std::move(eig.vectors);
      res.phases = std::move(eig.values);
      break;
    }
    case SymmetryClass::SymmetricAI: {
      linalg::RealSymmetricEigen eig = linalg::eigh_real(h.real());
      res.q = eig.vectors.cast<Complex>();
      res.phases = std::move(eig.values);
      break;
    }
    case SymmetryClass::ChiralAIII: {
      // H = [[0, A], [A^H, 0]] and A = Us S Vs^H give
      // H = Q diag(-S, S) Q^H with Q = [[Us, Us], [-Vs, Vs]] / sqrt(2).
      const Eigen::Index half = n / 2;
      const linalg::Svd sv = linalg::svd(h.topRightCorner(half, half));
      const double r = 1.0 / std::sqrt(2.0);
      res.q.resize(n, n);
      res.q.topLeftCorner(half, half) = r * sv.u;
      res.q.topRightCorner(half, half) = r * sv.u;
      res.q.bottomLeftCorner(half, half) = -r * sv.v;
      res.q.bottomRightCorner(half, half) = r * sv.v;
      res.phases.resize(n);
      res.phases.head(half) = -sv.s;
      res.phases.tail(half) = sv.s;
      break;
    }
    case SymmetryClass::SelfDualAII: break;
  }
  return res;
}

CMatrix reconstruct(const DiagResult& res) {
  const Eigen::VectorXcd d = (Complex(0.0, 1.0) * res.phases.cast<Complex>()).array().exp();
  return res.q * d.asDiagonal() * res.q.adjoint();
}

}  // namespace symlog
