#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "proxi/dgp.hpp"
#include "proxi/em.hpp"
#include "proxi/nuisance.hpp"
#include "proxi/record.hpp"

namespace proxi {

struct CrossfitConfig {
  int folds = 2;  // 1 = no splitting
  std::uint64_t shuffle_seed = 0;

  void validate() const;
};

// Full-data influence function for psi_a = E[Y(a)]:
//   I(A=a)/f(a|C) (Y - E[Y|A=a,C]) + E[Y|A=a,C] - psi_a.
double phi_full(const FullRecord& r, int arm, double psi_a, const NuisanceSet& nuis);

// Observed-data influence function: the latent Y is replaced by the
// omega-weighted sum over the class support.
double phi_obs(const ObservedRecord& o, int arm, double psi_a, const NuisanceSet& nuis);

// The outcome quantity each estimator substitutes into the influence
// function: the latent y (oracle), the proxy w (naive), or sum_y omega_y * y
// (proposed).
double outcome_term(const FullRecord& r, EstimatorKind kind, const NuisanceSet& nuis);

// The estimating equation P_n[phi] = 0 is affine in psi_a with slope -1, so
// the solution is the empirical mean of the uncentered influence function.
double solve_psi(const std::vector<FullRecord>& data, int arm, EstimatorKind kind,
                 const NuisanceSet& nuis);

// Strategy for producing the nuisance bundle on a training split. `tag`
// varies per fold so seeded sub-fits stay deterministic under refolding.
class NuisancePipeline {
 public:
  virtual ~NuisancePipeline() = default;
  virtual NuisanceSet fit(const std::vector<FullRecord>& train, EstimatorKind kind,
                          std::uint64_t tag) const = 0;
};

enum class MomentSource { Pooled, Stratified };

// Fits every nuisance from the data, per estimator kind and DGP flavor:
// stratified frequencies + spectral recovery for the binary design, logistic
// fits + EM mixture for the mixed one.
class FittedPipeline : public NuisancePipeline {
 public:
  FittedPipeline(DgpKind dgp, EmConfig em = {}, MomentSource source = MomentSource::Pooled)
      : dgp_(dgp), em_(em), source_(source) {}
  NuisanceSet fit(const std::vector<FullRecord>& train, EstimatorKind kind,
                  std::uint64_t tag) const override;

 private:
  DgpKind dgp_;
  EmConfig em_;
  MomentSource source_;
};

// Hands back a fixed bundle (true or deliberately corrupted nuisances).
class FixedPipeline : public NuisancePipeline {
 public:
  explicit FixedPipeline(NuisanceSet bundle) : bundle_(std::move(bundle)) {}
  NuisanceSet fit(const std::vector<FullRecord>&, EstimatorKind, std::uint64_t) const override {
    return bundle_;
  }

 private:
  NuisanceSet bundle_;
};

// Cross-fit estimate of psi_1, psi_0 and the ATE. With K folds the nuisances
// are fit on each fold's complement and psi evaluated on the fold; fold
// estimates are averaged with fold-size weights. var_hat is the empirical
// mean of (phi_1 - phi_0)^2 over n, divided by n, at the plugged-in psi.
// A fold missing a treatment arm triggers a reshuffle (at most 5).
EstimateResult estimate_ate(const std::vector<FullRecord>& data, EstimatorKind kind,
                            const NuisancePipeline& pipeline, const CrossfitConfig& cf);

// The bundle of population nuisances implied by a DGP (identity basis).
NuisanceSet true_nuisance(const DgpSpec& spec);

}  // namespace proxi
