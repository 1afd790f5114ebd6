#include "symlog/rng.hpp"

#include <cmath>

namespace symlog {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t trial) noexcept {
  return splitmix64(master ^ splitmix64(trial + 1));
}

CMatrix Rng::ginibre(Eigen::Index n) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal();
      const double im = normal();
      g(i, j) = Complex(s * re, s * im);
    }
  return g;
}

RMatrix Rng::gaussian(Eigen::Index n) {
  RMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal();
  return g;
}

CMatrix Rng::haar_unitary(Eigen::Index n) { return linalg::qr_unitary(ginibre(n)); }

RMatrix Rng::haar_orthogonal(Eigen::Index n) { return linalg::qr_orthogonal(gaussian(n)); }

CMatrix Rng::hermitian(Eigen::Index n) {
  const CMatrix g = ginibre(n);
  return 0.5 * (g + g.adjoint());
}

}  // namespace symlog
