#pragma once

#include <vector>

namespace proxi {

// Newton-Raphson logistic MLE, y in {0,1}, rows of x include the intercept.
// Converges on the gradient infinity-norm; step-halving keeps the
// log-likelihood non-decreasing.
std::vector<double> logistic_mle(const std::vector<std::vector<double>>& x,
                                 const std::vector<int>& y, double grad_tol = 1e-10,
                                 int max_iter = 100);

// Ordinary least squares via the normal equations (small designs only).
std::vector<double> least_squares(const std::vector<std::vector<double>>& x,
                                  const std::vector<double>& y);

}  // namespace proxi
