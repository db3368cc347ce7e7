#include "proxi/quadrature.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "proxi/errors.hpp"

namespace proxi {

GaussHermiteRule gauss_hermite(std::size_t n) {
  if (n < 1) fail("config", "gauss_hermite needs at least one node");
  // Jacobi matrix of the Hermite recurrence: zero diagonal, off-diagonal
  // sqrt(k/2). Eigenvalues are the nodes; the squared first eigenvector
  // components times sqrt(pi) are the weights.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double b = std::sqrt(static_cast<double>(k) / 2.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) fail("numerical", "gauss_hermite eigensolve failed");

  constexpr double sqrt_pi = 1.77245385090551602730;
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    const double v0 = solver.eigenvectors()(0, static_cast<Eigen::Index>(i));
    rule.weights[i] = sqrt_pi * v0 * v0;
  }
  return rule;
}

}  // namespace proxi
