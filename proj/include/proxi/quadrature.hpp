#pragma once

#include <cstddef>
#include <vector>

namespace proxi {

struct GaussHermiteRule {
  std::vector<double> nodes;  // roots of H_n, physicists' weight exp(-x^2)
  std::vector<double> weights;
};

// Golub-Welsch on the Hermite Jacobi matrix.
GaussHermiteRule gauss_hermite(std::size_t n);

// E[f(C)] for C ~ N(0,1): substitute c = sqrt(2) x, so
// E[f] = pi^{-1/2} sum_i w_i f(sqrt(2) x_i).
template <typename F>
double normal_expectation(const GaussHermiteRule& rule, F&& f) {
  constexpr double inv_sqrt_pi = 0.56418958354775628695;
  constexpr double sqrt2 = 1.41421356237309504880;
  double s = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(sqrt2 * rule.nodes[i]);
  return inv_sqrt_pi * s;
}

}  // namespace proxi
