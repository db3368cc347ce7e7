#include "proxi/record.hpp"

#include <cmath>

#include "proxi/errors.hpp"
#include "proxi/math.hpp"

namespace proxi {

std::vector<ObservedRecord> project_observed(const std::vector<FullRecord>& full) {
  std::vector<ObservedRecord> out;
  out.reserve(full.size());
  for (const auto& r : full) out.push_back(observe(r));
  return out;
}

std::string Stratum::label() const {
  if (is_global()) return "global";
  return "(a=" + std::to_string(a) + ",c=" + std::to_string(c) + ")";
}

std::vector<Stratum> binary_strata() {
  return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
}

const char* to_string(EstimatorKind k) {
  switch (k) {
    case EstimatorKind::Proposed: return "proposed";
    case EstimatorKind::Oracle: return "oracle";
    case EstimatorKind::Naive: return "naive";
  }
  return "?";
}

EstimatorKind estimator_kind_from_string(const std::string& s) {
  if (s == "proposed") return EstimatorKind::Proposed;
  if (s == "oracle") return EstimatorKind::Oracle;
  if (s == "naive") return EstimatorKind::Naive;
  fail("config", "unknown estimator kind: " + s);
}

double EstimateResult::ci_low() const { return ate - 1.96 * std::sqrt(var_hat); }
double EstimateResult::ci_high() const { return ate + 1.96 * std::sqrt(var_hat); }

}  // namespace proxi
