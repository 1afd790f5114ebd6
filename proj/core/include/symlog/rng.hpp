#pragma once

#include <cstdint>
#include <random>

#include "symlog/linalg.hpp"

namespace symlog {

/// splitmix64 finalizer; used to derive independent streams.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the stream for one trial: splitmix64(master ^ splitmix64(trial + 1)).
/// Streams depend only on (master, trial), never on scheduling.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t trial) noexcept;

/// mt19937_64 with Gaussian helpers. Deterministic for a given seed on a given
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }

  /// Complex Ginibre matrix, entries (N(0,1) + i N(0,1)) / sqrt(2).
  CMatrix ginibre(Eigen::Index n);
  /// Real Gaussian matrix, entries N(0,1).
  RMatrix gaussian(Eigen::Index n);
  /// Haar-distributed unitary via QR of a Ginibre matrix.
  CMatrix haar_unitary(Eigen::Index n);
  /// Haar-distributed real orthogonal matrix.
  RMatrix haar_orthogonal(Eigen::Index n);
  /// Random Hermitian matrix (G + G^H) / 2 for Ginibre G.
  CMatrix hermitian(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace symlog
