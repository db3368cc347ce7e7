#pragma once

#include <compare>
#include <string>
#include <vector>

namespace proxi {

// One sampled unit of the full data H = (A, Y, C, W, Z, V). Binary-mode
// records keep c, w, z, v in {0,1}; mixed-mode records carry real values and
// a binary latent y.
struct FullRecord {
  int a = 0;
  int y = 0;
  double c = 0, w = 0, z = 0, v = 0;
};

// The Y-hidden projection O = (A, C, W, Z, V).
struct ObservedRecord {
  int a = 0;
  double c = 0, w = 0, z = 0, v = 0;
};

inline ObservedRecord observe(const FullRecord& r) { return {r.a, r.c, r.w, r.z, r.v}; }

// Order-preserving, y dropped, all other fields bit-identical.
std::vector<ObservedRecord> project_observed(const std::vector<FullRecord>& full);

// A cell of (A, C): exact values for discrete C, or the designated global
// cell (a = c = -1) when the proxy laws depend on Y only.
struct Stratum {
  int a = -1;
  int c = -1;

  static Stratum global() { return {}; }
  bool is_global() const { return a < 0 && c < 0; }
  bool contains(const ObservedRecord& o) const {
    return (a < 0 || o.a == a) && (c < 0 || static_cast<int>(o.c) == c);
  }
  std::string label() const;

  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

// The four (A, C) cells of a binary-confounder design, in (a, c) order.
std::vector<Stratum> binary_strata();

enum class EstimatorKind { Proposed, Oracle, Naive };

const char* to_string(EstimatorKind k);
EstimatorKind estimator_kind_from_string(const std::string& s);

struct EstimateResult {
  double psi1 = 0, psi0 = 0, ate = 0;
  double var_hat = 0;  // empirical mean of the squared IF contrast, over n
  std::size_t n = 0;
  EstimatorKind kind = EstimatorKind::Proposed;

  double ci_low() const;
  double ci_high() const;
};

}  // namespace proxi
