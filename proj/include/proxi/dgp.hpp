#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "proxi/latent_law.hpp"
#include "proxi/record.hpp"

namespace proxi {

enum class DgpKind { Binary, Mixed };
const char* to_string(DgpKind k);
DgpKind dgp_kind_from_string(const std::string& s);

struct BinaryDgpParams {
  double p_c = 0.3;
  std::array<double, 2> p_a_given_c{0.4, 0.6};
  std::array<double, 3> outcome_coef{-1.0, 3.0, -1.5};  // logit p(Y=1|A,C): 1, A, C
  std::array<double, 2> proxy_success{0.1, 0.9};        // p(X=1 | Y=y), all three proxies
};

struct MixedDgpParams {
  std::array<double, 2> propensity_coef{-0.3, 0.8};  // logit p(A=1|C): 1, C
  std::array<double, 3> outcome_coef{-3.0, 3.0, 0.5};
  std::array<double, 2> w_map{-0.3, 1.5};  // X = a0 + a1 Y + eps
  std::array<double, 2> z_map{0.5, 1.2};
  std::array<double, 2> v_map{1.0, 0.8};
  double noise_sd = 1.0;
};

struct DgpSpec {
  DgpKind kind = DgpKind::Binary;
  BinaryDgpParams binary;
  MixedDgpParams mixed;

  void validate() const;
  double propensity(double c) const;        // p(A=1 | C=c)
  double outcome_prob(int a, double c) const;  // p(Y=1 | A=a, C=c)
  // E[X | Y=y]: success probability (binary) or affine-map mean (mixed)
  double proxy_conditional_mean(Proxy p, int y) const;
  // the population proxy law, globally (both DGPs have Y-only dependence)
  ProxyLaw proxy_law(Proxy p) const;
};

struct TrueTargets {
  double psi1 = 0, psi0 = 0, ate = 0;
};

// Draws n full records. (spec, n, seed) fully determines the output: record
// i consumes substream(seed, i) in the order C, A, Y, W, Z, V.
std::vector<FullRecord> simulate(const DgpSpec& spec, std::size_t n, std::uint64_t seed);

// Same substreams as simulate, but A is forced to `arm` before Y is drawn;
// lets tests check the adjustment formula directly against the simulator.
std::vector<FullRecord> simulate_intervened(const DgpSpec& spec, std::size_t n,
                                            std::uint64_t seed, int arm);

// psi_a = E[Y(a)] via the adjustment formula: exact two-point mixture for
// binary C, Gauss-Hermite quadrature (>= 64 nodes) for standard-normal C.
TrueTargets true_targets(const DgpSpec& spec);

// 2x2x2 probability array over (w, z, v); flat index 4w + 2z + v.
using Tensor222 = std::array<double, 8>;

inline double tensor_at(const Tensor222& t, int w, int z, int v) { return t[4 * w + 2 * z + v]; }
inline double& tensor_at(Tensor222& t, int w, int z, int v) { return t[4 * w + 2 * z + v]; }

// Population p(W=w, Z=z, V=v | stratum) under the binary DGP:
// T(w,z,v) = sum_y p(y | stratum) p(w|y) p(z|y) p(v|y).
Tensor222 population_tensor(const DgpSpec& spec, const Stratum& stratum);

}  // namespace proxi
