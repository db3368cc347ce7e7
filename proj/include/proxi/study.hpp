#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proxi/dgp.hpp"
#include "proxi/em.hpp"
#include "proxi/estimators.hpp"
#include "proxi/nuisance.hpp"
#include "proxi/record.hpp"

namespace proxi {

struct StudyConfig {
  DgpSpec dgp;
  std::vector<std::size_t> sizes{200, 500, 1000};
  int replications = 1000;
  std::uint64_t base_seed = 1234567;
  std::vector<EstimatorKind> kinds{EstimatorKind::Proposed, EstimatorKind::Naive,
                                   EstimatorKind::Oracle};
  // Studies fit nuisances on the full sample by default; the paper's tables
  // carry no sample splitting and two-fold fits starve the EM at n=200.
  CrossfitConfig crossfit{1, 0};
  EmConfig em{};
  int jobs = 0;  // 0 = hardware concurrency
  std::string out_dir;

  void validate() const;
};

struct RawRow {
  std::string method;
  std::size_t n = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  double psi1 = 0, psi0 = 0, ate = 0, var_hat = 0, ci_low = 0, ci_high = 0;
  bool error = false;
  std::string error_name;
};

struct SummaryRow {
  std::string method;
  std::size_t n = 0;
  double mean = 0;
  double bias = 0;   // mean - truth, truth recomputed via true_targets
  double n_var = 0;  // n x sample variance across replications
  double coverage = 0;
  int n_used = 0;    // replications entering the aggregate
};

struct StudyResult {
  TrueTargets truth;
  std::vector<SummaryRow> summary;
  std::vector<RawRow> raw;
};

// R replications per (method, n); replication r simulates with seed
// base_seed + r, so output is independent of worker scheduling. Replication
// errors are recorded and excluded only while below 1% of R, otherwise the
// study fails loudly with counts.
StudyResult run_study(const StudyConfig& cfg);

struct RobustnessCase {
  std::string label;
  std::vector<MisspecSpec> corrupted;
};

// The six Theorem-style single-robustness patterns plus an all-correct and a
// doubly-violated control.
std::vector<RobustnessCase> default_robustness_cases();

struct RobustnessRow {
  std::string case_label;
  std::string corrupted;
  std::size_t n = 0;
  double mean = 0, bias = 0, n_var = 0;
};

struct RobustnessResult {
  TrueTargets truth;
  std::vector<RobustnessRow> rows;
  std::vector<RawRow> raw;
};

// Proposed estimator with true-but-corrupted nuisance bundles, one study per
// case. Defaults: n = 20000, 500 replications.
RobustnessResult robustness_study(const StudyConfig& cfg, const std::vector<RobustnessCase>& cases);

// Deterministic CSV renderings (17-significant-digit floats).
std::string summary_csv(const StudyResult& result);
std::string raw_csv(const std::vector<RawRow>& raw);
std::string robustness_csv(const RobustnessResult& result);

}  // namespace proxi
