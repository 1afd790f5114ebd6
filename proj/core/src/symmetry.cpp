#include "symlog/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "symlog/error.hpp"

namespace symlog {

std::string_view to_string(SymmetryClass cls) noexcept {
  switch (cls) {
    case SymmetryClass::GenericA: return "a";
    case SymmetryClass::SymmetricAI: return "ai";
    case SymmetryClass::SelfDualAII: return "aii";
    case SymmetryClass::ChiralAIII: return "aiii";
  }
  return "?";
}

std::optional<SymmetryClass> parse_symmetry_class(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "a" || lower == "generica") return SymmetryClass::GenericA;
  if (lower == "ai" || lower == "symmetricai") return SymmetryClass::SymmetricAI;
  if (lower == "aii" || lower == "selfdualaii") return SymmetryClass::SelfDualAII;
  if (lower == "aiii" || lower == "chiralaiii") return SymmetryClass::ChiralAIII;
  return std::nullopt;
}

bool requires_even_dimension(SymmetryClass cls) noexcept {
  return cls == SymmetryClass::SelfDualAII || cls == SymmetryClass::ChiralAIII;
}

SymmetryContext::SymmetryContext(Eigen::Index n) : n_(n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "SymmetryContext: dimension must be positive");
  if (n % 2 == 0) {
    const Eigen::Index h = n / 2;
    gamma_ = CMatrix::Zero(n, n);
    gamma_.diagonal().head(h).setOnes();
    gamma_.diagonal().tail(h).setConstant(-1.0);
    zmat_ = CMatrix::Zero(n, n);
    zmat_.topRightCorner(h, h) = CMatrix::Identity(h, h);
    zmat_.bottomLeftCorner(h, h) = -CMatrix::Identity(h, h);
  }
}

const CMatrix& SymmetryContext::gamma() const {
  if (!even()) throw Error(ErrorCode::DimensionMismatch, "gamma needs an even dimension");
  return gamma_;
}

const CMatrix& SymmetryContext::zmat() const {
  if (!even()) throw Error(ErrorCode::DimensionMismatch, "zmat needs an even dimension");
  return zmat_;
}

void SymmetryContext::check(const CMatrix& m, SymmetryClass cls, const char* what) const {
  linalg::require_square(m, what);
  if (m.rows() != n_) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": matrix side " +
                                                  std::to_string(m.rows()) + " but context side " +
                                                  std::to_string(n_));
  }
  if (requires_even_dimension(cls) && !even()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": class " + std::string(to_string(cls)) + " needs an even dimension");
  }
}

CMatrix dual(const CMatrix& x, const SymmetryContext& ctx) {
  ctx.check(x, SymmetryClass::SelfDualAII, "dual");
  const Eigen::Index h = ctx.n() / 2;
  // With x = [[A, B], [C, D]]:  -Z x^T Z = [[D^T, -B^T], [-C^T, A^T]].
  CMatrix r(ctx.n(), ctx.n());
  r.topLeftCorner(h, h) = x.bottomRightCorner(h, h).transpose();
  r.topRightCorner(h, h) = -x.topRightCorner(h, h).transpose();
  r.bottomLeftCorner(h, h) = -x.bottomLeftCorner(h, h).transpose();
  r.bottomRightCorner(h, h) = x.topLeftCorner(h, h).transpose();
  return r;
}

CMatrix gamma_conjugate(const CMatrix& x, const SymmetryContext& ctx) {
  ctx.check(x, SymmetryClass::ChiralAIII, "gamma_conjugate");
  const Eigen::Index h = ctx.n() / 2;
  CMatrix r = x;
  r.topRightCorner(h, h) *= -1.0;
  r.bottomLeftCorner(h, h) *= -1.0;
  return r;
}

double unitary_symmetry_defect(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx) {
  ctx.check(u, cls, "unitary_symmetry_defect");
  switch (cls) {
    case SymmetryClass::GenericA: return 0.0;
    case SymmetryClass::SymmetricAI: return linalg::spectral_norm(u - u.transpose());
    case SymmetryClass::SelfDualAII: return linalg::spectral_norm(u - dual(u, ctx));
    case SymmetryClass::ChiralAIII: return linalg::spectral_norm(gamma_conjugate(u, ctx) - u.adjoint());
  }
  return 0.0;
}

double log_symmetry_defect(const CMatrix& h, SymmetryClass cls, const SymmetryContext& ctx) {
  ctx.check(h, cls, "log_symmetry_defect");
  switch (cls) {
    case SymmetryClass::GenericA: return 0.0;
    case SymmetryClass::SymmetricAI: return linalg::spectral_norm(h - h.transpose());
    case SymmetryClass::SelfDualAII: return linalg::spectral_norm(h - dual(h, ctx));
    case SymmetryClass::ChiralAIII: return linalg::spectral_norm(gamma_conjugate(h, ctx) + h);
  }
  return 0.0;
}

ResidualReport residual(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx) {
  ctx.check(u, cls, "residual");
  return {linalg::unitarity_defect(u), unitary_symmetry_defect(u, cls, ctx)};
}

CMatrix enforce_unitary_symmetry(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx) {
  ctx.check(u, cls, "enforce_unitary_symmetry");
  const Eigen::Index n = ctx.n();
  switch (cls) {
    case SymmetryClass::GenericA: return u;
    case SymmetryClass::SymmetricAI: {
      CMatrix r(n, n);
      for (Eigen::Index j = 0; j < n; ++j) {
        r(j, j) = u(j, j);
        for (Eigen::Index i = j + 1; i < n; ++i) {
          const Complex avg = 0.5 * (u(i, j) + u(j, i));
          r(i, j) = avg;
          r(j, i) = avg;
        }
      }
      return r;
    }
    case SymmetryClass::SelfDualAII: {
      const CMatrix d = dual(u, ctx);
      CMatrix r(n, n);
      // Entry (i, j) of the dual is a signed copy of one entry of u whose own
      // dual partner is (i, j), so the commutative sum is exactly self-dual.
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) r(i, j) = 0.5 * (u(i, j) + d(i, j));
      return r;
    }
    case SymmetryClass::ChiralAIII: {
      CMatrix r(n, n);
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) {
          const double s = ctx.gamma_sign(i) * ctx.gamma_sign(j);
          r(i, j) = 0.5 * (u(i, j) + s * std::conj(u(j, i)));
        }
      return r;
    }
  }
  return u;
}

CMatrix enforce_log_symmetry(const CMatrix& h, SymmetryClass cls, const SymmetryContext& ctx) {
  ctx.check(h, cls, "enforce_log_symmetry");
  const Eigen::Index n = ctx.n();
  CMatrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = 0.5 * (h(i, j) - std::conj(h(j, i)));

  switch (cls) {
    case SymmetryClass::GenericA: return a;
    case SymmetryClass::SymmetricAI: {
      // Anti-Hermitian and symmetric means i times a real symmetric matrix.
      CMatrix r(n, n);
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
          r(i, j) = Complex(0.0, 0.5 * (a(i, j).imag() + a(j, i).imag()));
      return r;
    }
    case SymmetryClass::SelfDualAII: {
      const CMatrix d = dual(a, ctx);
      CMatrix r(n, n);
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) r(i, j) = 0.5 * (a(i, j) + d(i, j));
      return r;
    }
    case SymmetryClass::ChiralAIII: {
      // (a - Gamma a Gamma) / 2 keeps the off-diagonal blocks and zeroes the rest.
      const Eigen::Index half = n / 2;
      a.topLeftCorner(half, half).setZero();
      a.bottomRightCorner(half, half).setZero();
      return a;
    }
  }
  return a;
}

CMatrix unitarize_step(const CMatrix& v) {
  linalg::require_square(v, "unitarize_step");
  return 0.5 * (v + linalg::inverse(v.adjoint()));
}

int aiii_index(const CMatrix& u, const SymmetryContext& ctx, const IndexOptions& opts) {
  ctx.check(u, SymmetryClass::ChiralAIII, "aiii_index");
  const ResidualReport rep = residual(u, SymmetryClass::ChiralAIII, ctx);
  if (rep.unitarity > opts.residual_tol || rep.symmetry > opts.residual_tol) {
    throw Error(ErrorCode::NotChiral, "unitarity " + std::to_string(rep.unitarity) + ", chiral defect " +
                                          std::to_string(rep.symmetry));
  }
  CMatrix ug = u;
  ug.rightCols(ctx.n() / 2) *= -1.0;
  const CMatrix herm = 0.5 * (ug + ug.adjoint());
  const RVector e = linalg::eigh(herm).values;
  int positive = 0;
  int negative = 0;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    if (std::abs(e(i)) < opts.ambiguity_tol) {
      throw Error(ErrorCode::AmbiguousSignature, "eigenvalue of U Gamma with modulus " + std::to_string(std::abs(e(i))));
    }
    (e(i) > 0 ? positive : negative) += 1;
  }
  // n even and no zero eigenvalues, so the signature is even.
  return (positive - negative) / 2;
}

}  // namespace symlog
