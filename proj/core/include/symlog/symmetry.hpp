#pragma once

#include <optional>
#include <string_view>

#include "symlog/linalg.hpp"

namespace symlog {

/// The four symmetry classes handled by the library, with the symmetry
/// always in canonical form:
///   GenericA     no extra relation
///   SymmetricAI  U^T = U
///   SelfDualAII  U^# = U, where X^# = -Z X^T Z
///   ChiralAIII   Gamma U Gamma = U^H, Gamma = diag(I, -I)
enum class SymmetryClass { GenericA, SymmetricAI, SelfDualAII, ChiralAIII };

std::string_view to_string(SymmetryClass cls) noexcept;

/// Accepts "a", "ai", "aii", "aiii" (case-insensitive) and the enumerator names.
std::optional<SymmetryClass> parse_symmetry_class(std::string_view text);

bool requires_even_dimension(SymmetryClass cls) noexcept;

/// Fixed matrices of the canonical symmetries for one dimension n:
/// gamma = diag(I_{n/2}, -I_{n/2}) and zmat = [[0, I], [-I, 0]].
/// Both are only available when n is even.
class SymmetryContext {
 public:
  explicit SymmetryContext(Eigen::Index n);

  Eigen::Index n() const noexcept { return n_; }
  bool even() const noexcept { return n_ % 2 == 0; }

  const CMatrix& gamma() const;
  const CMatrix& zmat() const;

  /// Diagonal entry of gamma: +1 for the first half, -1 for the second.
  double gamma_sign(Eigen::Index i) const noexcept { return i < n_ / 2 ? 1.0 : -1.0; }

  /// Throws DimensionMismatch unless `m` is n x n, and unless n is even when
  /// `cls` needs it.
  void check(const CMatrix& m, SymmetryClass cls, const char* what) const;

 private:
  Eigen::Index n_;
  CMatrix gamma_;
  CMatrix zmat_;
};

struct ResidualReport {
  double unitarity = 0.0;  // ||U^H U - I||_2
  double symmetry = 0.0;   // class-specific defect, 0 for GenericA
};

/// X^# = -Z X^T Z.
CMatrix dual(const CMatrix& x, const SymmetryContext& ctx);

/// Gamma X Gamma.
CMatrix gamma_conjugate(const CMatrix& x, const SymmetryContext& ctx);

/// Class defect of a unitary: ||U - U^T||_2 (AI), ||U - U^#||_2 (AII),
/// ||Gamma U Gamma - U^H||_2 (AIII), 0 (A).
double unitary_symmetry_defect(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx);

/// Class defect of an anti-Hermitian logarithm: ||H - H^T||_2 (AI),
/// ||H - H^#||_2 (AII), ||Gamma H Gamma + H||_2 (AIII), 0 (A).
double log_symmetry_defect(const CMatrix& h, SymmetryClass cls, const SymmetryContext& ctx);

ResidualReport residual(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx);

/// Averaging projection onto the class relation of a unitary. The result
/// satisfies the relation exactly in floating point.
CMatrix enforce_unitary_symmetry(const CMatrix& u, SymmetryClass cls, const SymmetryContext& ctx);

/// Projects onto anti-Hermitian matrices, then onto the class relation of the
/// logarithm (AI: symmetric, AII: self-dual, AIII: Gamma-odd). Both relations
/// hold exactly in floating point.
CMatrix enforce_log_symmetry(const CMatrix& h, SymmetryClass cls, const SymmetryContext& ctx);

/// One Newton step toward the unitary polar factor: (v + (v^H)^{-1}) / 2.
CMatrix unitarize_step(const CMatrix& v);

/// Tolerances for aiii_index.
struct IndexOptions {
  double residual_tol = 1e-6;
  double ambiguity_tol = 1e-8;
};

/// Half the signature of U Gamma for a chiral unitary. An exact integer;
/// nonzero values obstruct structured square roots and logarithms.
int aiii_index(const CMatrix& u, const SymmetryContext& ctx, const IndexOptions& opts = {});

}  // namespace symlog
