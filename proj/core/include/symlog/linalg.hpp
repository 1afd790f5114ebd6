#pragma once

#include <complex>

#include <Eigen/Dense>

namespace symlog {

using Complex = std::complex<double>;

/// Dense square complex matrix in double precision.
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace linalg {

struct HermitianEigen {
  CMatrix vectors;
  RVector values;  // ascending
};

struct RealSymmetricEigen {
  RMatrix vectors;
  RVector values;  // ascending
};

struct Svd {
  CMatrix u;
  RVector s;  // descending, nonnegative
  CMatrix v;
};

/// Throws DimensionMismatch unless `a` is square (and non-empty).
void require_square(const CMatrix& a, const char* what);

CMatrix identity(Eigen::Index n);

CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

/// LU-based inverse. A pivot below n * eps * ||a||_F raises SingularMatrix.
CMatrix inverse(const CMatrix& a);

/// Hermitian eigendecomposition h = Q diag(e) Q^H with ascending e.
/// The input is symmetrized first; inputs further than 1e-10 ||h||_F from
/// Hermitian are rejected with NotHermitian.
HermitianEigen eigh(const CMatrix& h);

/// Real symmetric eigendecomposition; the returned basis is real orthogonal.
RealSymmetricEigen eigh_real(const RMatrix& s);

/// Full SVD a = U diag(s) V^H.
Svd svd(const CMatrix& a);

/// Q factor of a = QR with R's diagonal made real positive.
CMatrix qr_unitary(const CMatrix& a);

/// Real analogue of qr_unitary: Q real orthogonal, R's diagonal positive.
RMatrix qr_orthogonal(const RMatrix& a);

double spectral_norm(const CMatrix& a);
double frobenius_norm(const CMatrix& a);

/// ||a^H a - I||_2.
double unitarity_defect(const CMatrix& a);

bool all_finite(const CMatrix& a);

}  // namespace linalg
}  // namespace symlog
