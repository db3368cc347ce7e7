#pragma once

#include <array>
#include <vector>

#include "proxi/latent_law.hpp"
#include "proxi/record.hpp"

namespace proxi {

// Logistic outcome regression p(Y=1|A,C) = expit(b0 + bA a + bC c) fit by
// maximizing the observed-data log-likelihood with the measurement densities
// frozen at the supplied gaussian law:
//   l(beta) = sum_i log[ sum_y Pr_beta(y | a_i, c_i) q_i(y) ],
//   q_i(y) = p(w_i|y) p(z_i|y) p(v_i|y).
// Damped Newton with backtracking; converges when the gradient inf-norm
// drops below 1e-8, errs after 200 iterations or on a flat likelihood.
std::array<double, 3> fit_outcome_given_mixture(const std::vector<ObservedRecord>& records,
                                                const LatentLaw& law);

}  // namespace proxi
