#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace pqfib {

/// Nodes and weights integrating against exp(-u^2) on the real line;
/// exact for polynomials of degree <= 2 * size() - 1.
template <class Real = double>
struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(nodes[0]));
    R acc = R(0);
    for (std::size_t j = 0; j < nodes.size(); ++j) acc += weights[j] * f(nodes[j]);
    return acc;
  }
};

namespace detail {

// Orthonormal Hermite recurrence h_{j+1} = x sqrt(2/(j+1)) h_j - sqrt(j/(j+1)) h_{j-1},
// h_0 = pi^{-1/4}.  Returns h_n and h_{n-1}.
template <class Real>
void orthonormal_hermite(int n, const Real& x, Real& hn, Real& hn1) {
  using std::sqrt;
  const Real pi = Real(3.14159265358979323846264338327950288419716939937510582097494459L);
  Real h_prev(0);
  Real h = Real(1) / sqrt(sqrt(pi));
  for (int j = 0; j < n; ++j) {
    const Real h_next = x * sqrt(Real(2) / Real(j + 1)) * h - sqrt(Real(j) / Real(j + 1)) * h_prev;
    h_prev = h;
    h = h_next;
  }
  hn = h;
  hn1 = h_prev;
}

}  // namespace detail

/// Gauss-Hermite rule with `count` nodes.
///
/// Golub-Welsch: the nodes are the eigenvalues of the symmetric Jacobi
/// matrix with zero diagonal and off-diagonals sqrt(j/2), j = 1..count-1.
/// Each eigenvalue is then polished by Newton steps on the orthonormal
/// recurrence and the weight is taken as 2 / (sqrt(2n) h_{n-1}(x))^2, which
/// keeps full relative accuracy in the far tails where the
/// eigenvector-based weights do not.
template <class Real = double>
QuadratureRule<Real> gauss_hermite_rule(int count) {
  if (count < 1) throw std::invalid_argument("gauss_hermite_rule: count must be positive");
  using std::abs;
  using std::sqrt;

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
  Eigen::VectorXd sub(std::max(count - 1, 0));
  for (int j = 1; j < count; ++j) sub[j - 1] = std::sqrt(j / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_hermite_rule: eigen-solve failed");

  QuadratureRule<Real> rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const Real two_n = sqrt(Real(2 * count));
  for (int i = 0; i < count; ++i) {
    Real x = Real(solver.eigenvalues()[i]);
    Real hn, hn1;
    for (int it = 0; it < 8; ++it) {
      detail::orthonormal_hermite(count, x, hn, hn1);
      const Real step = hn / (two_n * hn1);
      x -= step;
      if (abs(step) <= std::numeric_limits<Real>::epsilon() * (Real(1) + abs(x))) break;
    }
    detail::orthonormal_hermite(count, x, hn, hn1);
    const Real deriv = two_n * hn1;
    rule.nodes[i] = x;
    rule.weights[i] = Real(2) / (deriv * deriv);
  }
  // The spectrum is symmetric; enforce it exactly.
  for (int i = 0; i < count / 2; ++i) {
    const Real x = (rule.nodes[count - 1 - i] - rule.nodes[i]) / Real(2);
    const Real w = (rule.weights[count - 1 - i] + rule.weights[i]) / Real(2);
    rule.nodes[i] = -x;
    rule.nodes[count - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = Real(0);
  return rule;
}

}  // namespace pqfib
