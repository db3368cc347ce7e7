#pragma once

#include <cmath>

namespace proxi {

// expit evaluated branch-wise so exp() never overflows.
inline double expit(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p) - std::log1p(-p); }

inline double normal_pdf(double x, double mu, double sd) {
  constexpr double inv_sqrt_2pi = 0.39894228040143267794;
  const double z = (x - mu) / sd;
  return inv_sqrt_2pi / sd * std::exp(-0.5 * z * z);
}

inline double normal_logpdf(double x, double mu, double sd) {
  constexpr double log_sqrt_2pi = 0.91893853320467274178;
  const double z = (x - mu) / sd;
  return -0.5 * z * z - std::log(sd) - log_sqrt_2pi;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

}  // namespace proxi
