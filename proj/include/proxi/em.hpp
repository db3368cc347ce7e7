#pragma once

#include <cstdint>
#include <vector>

#include "proxi/latent_law.hpp"
#include "proxi/record.hpp"

namespace proxi {

struct EmConfig {
  int n_classes = 2;
  int max_iter = 500;
  double tol = 1e-8;  // relative change of the observed log-likelihood
  int n_restarts = 5;
  std::uint64_t seed = 0;  // drives the random restarts

  void validate() const;
};

struct EmTrace {
  std::vector<double> log_lik;  // winning restart, one entry per iteration
  int restart = -1;
  bool converged = false;
};

// Two-component Gaussian measurement mixture on (W, Z, V), fit by EM on the
// observed log-likelihood. Restart 0 initializes by splitting on the median
// of W; the rest draw random responsibilities. Returns the best converged
// restart, label-aligned by the W mean.
LatentLaw em_fit_mixture(const std::vector<ObservedRecord>& records, const EmConfig& cfg,
                         EmTrace* trace_out = nullptr);

// Observed log-likelihood of a gaussian law on (W, Z, V).
double mixture_log_lik(const std::vector<ObservedRecord>& records, const LatentLaw& law);

}  // namespace proxi
