#pragma once

#include <array>
#include <vector>

#include "proxi/record.hpp"

namespace proxi {

enum class Proxy { W = 0, Z = 1, V = 2 };
const char* to_string(Proxy p);

// Conditional law of one proxy given the latent class: a discrete table
// p(X = support[s] | Y = y) or per-class Gaussian parameters.
struct ProxyLaw {
  bool discrete = true;
  std::vector<double> support;             // discrete levels
  std::vector<std::vector<double>> table;  // [y][s], each row sums to 1
  std::vector<double> mean, sd;            // gaussian, indexed by y

  static ProxyLaw bernoulli(std::vector<double> success);  // p(X=1 | Y=y)
  static ProxyLaw gaussian(std::vector<double> mean, std::vector<double> sd);

  double conditional_mean(int y) const;
  double success_prob(int y) const;  // binary table only
  void validate(int n_classes) const;
};

// Recovered joint-law components for a single stratum: class probabilities
// plus each proxy's conditional law.
struct LatentLaw {
  Stratum stratum;
  std::vector<double> class_probs;
  std::array<ProxyLaw, 3> proxies;

  int n_classes() const { return static_cast<int>(class_probs.size()); }
  const ProxyLaw& proxy(Proxy p) const { return proxies[static_cast<int>(p)]; }
  void validate() const;
};

// Reorders classes so the anchor's success probability (discrete) or mean
// (gaussian) is strictly increasing in y; all tables permute in lockstep.
// Idempotent. Fails with "label-ambiguity" when the anchor gap is < 1e-8.
LatentLaw align_labels(const LatentLaw& law, Proxy anchor = Proxy::W);

}  // namespace proxi
