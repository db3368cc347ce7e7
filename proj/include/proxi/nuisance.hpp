#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "proxi/latent_law.hpp"
#include "proxi/record.hpp"
#include "proxi/weight_basis.hpp"

namespace proxi {

inline constexpr double kPropensityEps = 1e-6;   // positivity guard
inline constexpr double kMomentGapMin = 1e-8;    // weight-denominator guard

enum class CKind { Binary, Continuous };

// p(A=1 | C): a two-cell table for binary C or logistic coefficients.
struct PropensityModel {
  CKind kind = CKind::Binary;
  std::array<double, 2> table{0.5, 0.5};  // [c]
  double b0 = 0, b_c = 0;

  double at(double c) const;                  // clamped into (eps, 1-eps)
  double arm_prob(int a, double c) const;     // p(A=a | C=c)
  void validate() const;
};

// E[Y | A, C] (or the naive comparator's E[W | A, C]).
struct OutcomeMeanModel {
  enum class Form { BinaryTable, Logistic, Linear };
  Form form = Form::BinaryTable;
  std::array<std::array<double, 2>, 2> table{};  // [a][c]
  double b0 = 0, b_a = 0, b_c = 0;               // expit(.) or affine(.)

  double at(int a, double c) const;
};

// E[ b_j^X(X) | Y=y, A, C ], laid out as [proxy][j * K + y]. Both DGPs have
// Y-only proxy laws, so the global cell is the default; a per-(a,c) override
// exists for stratified binary-C fits.
struct MomentTable {
  int n_classes = 2;
  std::array<std::vector<double>, 3> global{};
  std::optional<std::array<std::array<std::vector<double>, 3>, 4>> per_stratum;  // cell a*2+c

  bool empty() const { return global[0].empty(); }
  double at(Proxy p, int j, int y, int a, double c) const;
  void validate() const;  // cross-class gaps above kMomentGapMin, per j
};

struct MisspecSpec {
  enum class Target { Propensity, OutcomeMean, MomentsW, MomentsZ, MomentsV };
  Target target = Target::OutcomeMean;
  double offset = 0.75;  // logit-scale offset for function nuisances
  double shrink = 0.5;   // pull moments toward their class average

  std::string label() const;
};
MisspecSpec::Target misspec_target_from_string(const std::string& s);
const char* to_string(MisspecSpec::Target t);

// The eta bundle entering the influence functions and weights.
struct NuisanceSet {
  PropensityModel propensity;
  OutcomeMeanModel outcome_mean;
  MomentTable moments;
  WeightBasis basis;
  std::vector<double> y_support{0.0, 1.0};
  std::vector<std::string> corruption_log;

  void validate() const;
};

// Binary C: stratified frequencies with add-0.5 smoothing. Continuous C:
// logistic MLE of A on (1, C). Errs when a treatment arm is absent.
PropensityModel fit_propensity(const std::vector<ObservedRecord>& records, CKind c_kind);

// E[Y|A,C] from recovered components: per-cell class probabilities for
// binary C (support-weighted mean per cell), or logistic coefficients.
OutcomeMeanModel outcome_mean_from_law(
    const std::array<std::array<std::vector<double>, 2>, 2>& cell_class_probs,
    const std::vector<double>& support);
OutcomeMeanModel outcome_mean_from_coef(const std::array<double, 3>& beta);

// The class weights omega_y(O; eta): for each class i, the three pairwise
// products of centered-and-scaled proxy factors minus twice their triple
// product, with factors taken over every class j != i. Errs with
// "weight-degeneracy" when a cross-class moment gap is below 1e-8.
std::vector<double> omega(const ObservedRecord& o, const NuisanceSet& nuis);

// Returns a copy with exactly one target corrupted and the log appended;
// corruption that would break the bundle invariants is rejected.
NuisanceSet misspecify(const NuisanceSet& nuis, const MisspecSpec& spec);

}  // namespace proxi
