#include <cmath>
#include <limits>
#include <utility>
#include <numbers>
#include <string>

#include "symlog/error.hpp"
#include "symlog/rootlog.hpp"

namespace symlog {

namespace {

// Value and derivative of the Legendre polynomial P_n at x.
std::pair<double, double> legendre(int n, double x) {
  double prev = 1.0;
  double cur = x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  if (n == 0) return {1.0, 0.0};
  return {cur, n * (x * cur - prev) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre_unit(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be >= 1");
  const int n = order;
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // i-th largest root of P_n by Newton from the standard initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::abs(x)) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // half the [-1, 1] weight
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

Complex pade_log1p(Complex x, int order) {
  const QuadratureRule rule = gauss_legendre_unit(order);
  Complex sum = 0.0;
  for (int j = 0; j < order; ++j) sum += rule.weights[j] * x / (1.0 + rule.nodes[j] * x);
  return sum;
}

CMatrix pade_log(const CMatrix& x, int order) {
  linalg::require_square(x, "pade_log");
  const double norm = linalg::spectral_norm(x);
  if (!(norm < 0.5)) {
    throw Error(ErrorCode::NormTooLarge, "pade_log: ||x||_2 = " + std::to_string(norm));
  }
  const QuadratureRule rule = gauss_legendre_unit(order);
  const Eigen::Index n = x.rows();
  CMatrix sum = CMatrix::Zero(n, n);
  for (int j = 0; j < order; ++j) {
    CMatrix shifted = rule.nodes[j] * x;
    shifted.diagonal().array() += 1.0;
    // x (I + t x)^{-1} = (I + t x)^{-1} x; solve instead of forming the inverse.
    Eigen::PartialPivLU<CMatrix> lu(shifted);
    const double pivot_floor = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * shifted.norm();
    if ((lu.matrixLU().diagonal().cwiseAbs().array() < pivot_floor).any()) {
      throw Error(ErrorCode::SingularMatrix, "pade_log: singular shifted system");
    }
    sum += rule.weights[j] * lu.solve(x);
  }
  return sum;
}

}  // namespace symlog
