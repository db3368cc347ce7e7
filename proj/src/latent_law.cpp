#include "proxi/latent_law.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "proxi/errors.hpp"

namespace proxi {

namespace {
constexpr double kProbSumTol = 1e-12;

void check_prob_vector(const std::vector<double>& p, const char* what) {
  double s = 0;
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) fail("invalid-law", std::string(what) + " entry outside [0,1]");
    s += v;
  }
  if (std::abs(s - 1.0) > kProbSumTol)
    fail("invalid-law", std::string(what) + " does not sum to 1 within 1e-12");
}
}  // namespace

const char* to_string(Proxy p) {
  switch (p) {
    case Proxy::W: return "W";
    case Proxy::Z: return "Z";
    case Proxy::V: return "V";
  }
  return "?";
}

ProxyLaw ProxyLaw::bernoulli(std::vector<double> success) {
  ProxyLaw law;
  law.discrete = true;
  law.support = {0.0, 1.0};
  law.table.reserve(success.size());
  for (double p : success) law.table.push_back({1.0 - p, p});
  return law;
}

ProxyLaw ProxyLaw::gaussian(std::vector<double> mean, std::vector<double> sd) {
  ProxyLaw law;
  law.discrete = false;
  law.mean = std::move(mean);
  law.sd = std::move(sd);
  return law;
}

double ProxyLaw::conditional_mean(int y) const {
  if (!discrete) return mean.at(y);
  double m = 0;
  for (std::size_t s = 0; s < support.size(); ++s) m += support[s] * table.at(y)[s];
  return m;
}

double ProxyLaw::success_prob(int y) const {
  if (!discrete || support.size() != 2) fail("invalid-law", "success_prob needs a binary table");
  return table.at(y)[1];
}

void ProxyLaw::validate(int n_classes) const {
  if (discrete) {
    if (static_cast<int>(table.size()) != n_classes)
      fail("invalid-law", "proxy table has wrong class count");
    for (const auto& row : table) {
      if (row.size() != support.size()) fail("invalid-law", "proxy table row/support mismatch");
      check_prob_vector(row, "proxy conditional");
    }
  } else {
    if (static_cast<int>(mean.size()) != n_classes || static_cast<int>(sd.size()) != n_classes)
      fail("invalid-law", "gaussian proxy law has wrong class count");
    for (double s : sd)
      if (!(s > 0.0)) fail("invalid-law", "gaussian sd must be positive");
  }
}

void LatentLaw::validate() const {
  if (class_probs.empty()) fail("invalid-law", "empty class probabilities");
  check_prob_vector(class_probs, "class probabilities");
  for (const auto& p : proxies) p.validate(n_classes());
}

LatentLaw align_labels(const LatentLaw& law, Proxy anchor) {
  law.validate();
  const ProxyLaw& anchor_law = law.proxy(anchor);
  const int k = law.n_classes();

  std::vector<double> key(k);
  for (int y = 0; y < k; ++y)
    key[y] = anchor_law.discrete ? anchor_law.success_prob(y) : anchor_law.conditional_mean(y);

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

  for (int i = 0; i + 1 < k; ++i)
    if (std::abs(key[order[i + 1]] - key[order[i]]) <= 1e-8)
      fail("label-ambiguity", std::string("anchor ") + to_string(anchor) +
                                  " moments are separated by less than 1e-8");

  LatentLaw out = law;
  for (int y = 0; y < k; ++y) {
    out.class_probs[y] = law.class_probs[order[y]];
    for (int p = 0; p < 3; ++p) {
      if (law.proxies[p].discrete)
        out.proxies[p].table[y] = law.proxies[p].table[order[y]];
      else {
        out.proxies[p].mean[y] = law.proxies[p].mean[order[y]];
        out.proxies[p].sd[y] = law.proxies[p].sd[order[y]];
      }
    }
  }
  return out;
}

}  // namespace proxi
