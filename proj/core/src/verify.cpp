#include "symlog/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symlog/error.hpp"

namespace symlog::verify {

CMatrix expm_antihermitian(const CMatrix& h) {
  linalg::require_square(h, "expm_antihermitian");
  const CMatrix herm = Complex(0.0, -1.0) * h;
  const linalg::HermitianEigen eig = linalg::eigh(herm);
  const Eigen::VectorXcd d = (Complex(0.0, 1.0) * eig.values.cast<Complex>()).array().exp();
  return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

CMatrix expm_hermitian(const CMatrix& h, double t) {
  const linalg::HermitianEigen eig = linalg::eigh(h);
  const Eigen::VectorXcd d = (Complex(0.0, -t) * eig.values.cast<Complex>()).array().exp();
  return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

double antihermitian_defect(const CMatrix& h) { return linalg::spectral_norm(h + h.adjoint()); }

double max_imag(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff(); }

double arc_gap_at_minus_one(const CMatrix& u) {
  linalg::require_square(u, "arc_gap_at_minus_one");
  Eigen::ComplexEigenSolver<CMatrix> solver(u, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "arc_gap_at_minus_one");
  double gap = std::numbers::pi;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    gap = std::min(gap, std::numbers::pi - std::abs(std::arg(solver.eigenvalues()(i))));
  }
  return gap;
}

double eigen_residual(const CMatrix& u, const DiagResult& res) {
  const Eigen::VectorXcd d = (Complex(0.0, 1.0) * res.phases.cast<Complex>()).array().exp();
  return linalg::spectral_norm(u * res.q - res.q * d.asDiagonal());
}

PairingDefect aiii_pairing_defect(const DiagResult& res) {
  const Eigen::Index n = res.q.rows();
  const Eigen::Index h = n / 2;
  PairingDefect out;
  for (Eigen::Index j = 0; j < h; ++j) {
    Eigen::VectorXcd gq = res.q.col(j);
    gq.tail(h) *= -1.0;
    out.vectors = std::max(out.vectors, (gq - res.q.col(j + h)).norm());
    out.phases = std::max(out.phases, std::abs(res.phases(j) + res.phases(j + h)));
  }
  return out;
}

double phase_multiset_distance(RVector a, RVector b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace symlog::verify
