#include "symlog/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "symlog/error.hpp"

namespace symlog {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotNearlyUnitary: return "NotNearlyUnitary";
    case ErrorCode::NotChiral: return "NotChiral";
    case ErrorCode::AmbiguousSignature: return "AmbiguousSignature";
    case ErrorCode::ObstructionDetected: return "ObstructionDetected";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::SingularIteration: return "SingularIteration";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::UnsupportedClass: return "UnsupportedClass";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// One Newton-Schulz step v (3I - v^H v) / 2. The solver's eigenvectors are
// orthonormal to about n eps; this brings them to a few eps, which matters
// when many exponentials built from them are multiplied together.
template <typename M>
M reorthonormalize(const M& v) {
  const Eigen::Index n = v.cols();
  return 0.5 * v * (3.0 * M::Identity(n, n) - v.adjoint() * v);
}

}  // namespace

void require_square(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected a non-empty square matrix, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  require_square(a, "mat_mul");
  require_square(b, "mat_mul");
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "mat_mul: sides " + std::to_string(a.rows()) +
                                                  " and " + std::to_string(b.rows()));
  }
  CMatrix c(a.rows(), a.rows());
  c.noalias() = a * b;
  return c;
}

CMatrix inverse(const CMatrix& a) {
  require_square(a, "inverse");
  const auto n = a.rows();
  Eigen::PartialPivLU<CMatrix> lu(a);
  const double threshold = static_cast<double>(n) * kEps * a.norm();
  const auto& packed = lu.matrixLU();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double pivot = std::abs(packed(i, i));
    if (!(pivot >= threshold) || pivot == 0.0) {
      throw Error(ErrorCode::SingularMatrix,
                  "LU pivot " + std::to_string(pivot) + " below threshold at row " + std::to_string(i));
    }
  }
  CMatrix inv = lu.inverse();
  if (!all_finite(inv)) throw Error(ErrorCode::SingularMatrix, "inverse is not finite");
  return inv;
}

HermitianEigen eigh(const CMatrix& h) {
  require_square(h, "eigh");
  const double scale = h.norm();
  const double skew = (h - h.adjoint()).norm();
  if (skew > 1e-10 * scale) {
    throw Error(ErrorCode::NotHermitian, "eigh: ||h - h^H||_F = " + std::to_string(skew));
  }
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "eigh");
  return {reorthonormalize(solver.eigenvectors()), solver.eigenvalues()};
}

RealSymmetricEigen eigh_real(const RMatrix& s) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "eigh_real: expected a square matrix");
  }
  const RMatrix sym = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "eigh_real");
  return {reorthonormalize(solver.eigenvectors()), solver.eigenvalues()};
}

Svd svd(const CMatrix& a) {
  require_square(a, "svd");
  Eigen::BDCSVD<CMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "svd");
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

CMatrix qr_unitary(const CMatrix& a) {
  require_square(a, "qr_unitary");
  const auto n = a.rows();
  Eigen::HouseholderQR<CMatrix> qr(a);
  const auto& packed = qr.matrixQR();
  const double threshold = static_cast<double>(n) * kEps * a.norm();
  CMatrix q = qr.householderQ();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex r = packed(j, j);
    const double mag = std::abs(r);
    if (!(mag >= threshold) || mag == 0.0) {
      throw Error(ErrorCode::SingularMatrix, "qr_unitary: rank deficient input");
    }
    // a = (Q P)(P^* R) with P = diag(r_jj / |r_jj|) puts |r_jj| on R's diagonal.
    q.col(j) *= r / mag;
  }
  return q;
}

RMatrix qr_orthogonal(const RMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "qr_orthogonal: expected a square matrix");
  }
  const auto n = a.rows();
  Eigen::HouseholderQR<RMatrix> qr(a);
  const auto& packed = qr.matrixQR();
  const double threshold = static_cast<double>(n) * kEps * a.norm();
  RMatrix q = qr.householderQ();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double r = packed(j, j);
    if (!(std::abs(r) >= threshold) || r == 0.0) {
      throw Error(ErrorCode::SingularMatrix, "qr_orthogonal: rank deficient input");
    }
    if (r < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> solver(a);
  return solver.singularValues()(0);
}

double frobenius_norm(const CMatrix& a) { return a.norm(); }

double unitarity_defect(const CMatrix& a) {
  require_square(a, "unitarity_defect");
  CMatrix g(a.cols(), a.cols());
  g.noalias() = a.adjoint() * a;
  g.diagonal().array() -= 1.0;
  return spectral_norm(g);
}

bool all_finite(const CMatrix& a) { return a.allFinite(); }

}  // namespace linalg
}  // namespace symlog
