#pragma once

#include <map>
#include <vector>

#include "proxi/dgp.hpp"
#include "proxi/latent_law.hpp"
#include "proxi/record.hpp"

namespace proxi {

// Relative frequencies of (W, Z, V) among the stratum's records; requires
// binary proxies and at least one record in the stratum.
Tensor222 build_tensor(const std::vector<ObservedRecord>& records, const Stratum& stratum);

// Factors a 2x2x2 mixture tensor into (class probs, p(W|Y), p(Z|Y), p(V|Y)).
// Let M(w,z) be the V-marginal and M1 the V=1 slice; the eigenvalues of
// M1 M^-1 are p(V=1|Y=y) and its eigenvector columns, normalized to sum one,
// are p(W|Y=y). Then p(Y) = row sums of Lw^-1 M and p(Z|Y)^T =
// diag(p(Y))^-1 Lw^-1 M. Class labels are arbitrary on return.
LatentLaw spectral_recover(const Tensor222& tensor, const Stratum& stratum = Stratum::global());

struct StratifiedRecovery {
  std::map<Stratum, LatentLaw> per_stratum;     // aligned on the W anchor
  std::array<std::array<double, 2>, 2> p_y1{};  // [a][c] -> p(Y=1 | A=a, C=c)
};

// Per-(A,C)-cell recovery for binary C. Errors are tagged with the stratum.
StratifiedRecovery recover_stratified(const std::vector<ObservedRecord>& records,
                                      const std::vector<Stratum>& strata = binary_strata());

}  // namespace proxi
