#include "proxi/dgp.hpp"

#include <cmath>

#include "proxi/errors.hpp"
#include "proxi/math.hpp"
#include "proxi/quadrature.hpp"
#include "proxi/rng.hpp"

namespace proxi {

const char* to_string(DgpKind k) { return k == DgpKind::Binary ? "binary" : "mixed"; }

DgpKind dgp_kind_from_string(const std::string& s) {
  if (s == "binary") return DgpKind::Binary;
  if (s == "mixed") return DgpKind::Mixed;
  fail("config", "unknown dgp kind: " + s);
}

void DgpSpec::validate() const {
  if (kind == DgpKind::Binary) {
    auto in_unit = [](double p) { return p > 0.0 && p < 1.0; };
    if (!in_unit(binary.p_c) || !in_unit(binary.p_a_given_c[0]) || !in_unit(binary.p_a_given_c[1]))
      fail("config", "binary DGP probabilities must lie in (0,1)");
    if (!in_unit(binary.proxy_success[0]) || !in_unit(binary.proxy_success[1]))
      fail("config", "proxy success probabilities must lie in (0,1)");
  } else {
    if (!(mixed.noise_sd > 0.0)) fail("config", "mixed DGP noise sd must be positive");
  }
}

double DgpSpec::propensity(double c) const {
  if (kind == DgpKind::Binary) return binary.p_a_given_c[static_cast<int>(c)];
  return expit(mixed.propensity_coef[0] + mixed.propensity_coef[1] * c);
}

double DgpSpec::outcome_prob(int a, double c) const {
  const auto& b = kind == DgpKind::Binary ? binary.outcome_coef : mixed.outcome_coef;
  return expit(b[0] + b[1] * a + b[2] * c);
}

double DgpSpec::proxy_conditional_mean(Proxy p, int y) const {
  if (kind == DgpKind::Binary) return binary.proxy_success[y];
  const auto& m = p == Proxy::W ? mixed.w_map : (p == Proxy::Z ? mixed.z_map : mixed.v_map);
  return m[0] + m[1] * y;
}

ProxyLaw DgpSpec::proxy_law(Proxy p) const {
  if (kind == DgpKind::Binary)
    return ProxyLaw::bernoulli({binary.proxy_success[0], binary.proxy_success[1]});
  return ProxyLaw::gaussian({proxy_conditional_mean(p, 0), proxy_conditional_mean(p, 1)},
                            {mixed.noise_sd, mixed.noise_sd});
}

namespace {

// One record per substream; draw order C, A, Y, W, Z, V is part of the
// reproducibility contract.
FullRecord draw_record(const DgpSpec& spec, SplitMix64& g, int forced_arm) {
  FullRecord r;
  if (spec.kind == DgpKind::Binary) {
    r.c = g.bernoulli(spec.binary.p_c) ? 1.0 : 0.0;
    r.a = g.bernoulli(spec.propensity(r.c)) ? 1 : 0;
    const int a_for_y = forced_arm < 0 ? r.a : forced_arm;
    r.y = g.bernoulli(spec.outcome_prob(a_for_y, r.c)) ? 1 : 0;
    const double ps = spec.binary.proxy_success[r.y];
    r.w = g.bernoulli(ps) ? 1.0 : 0.0;
    r.z = g.bernoulli(ps) ? 1.0 : 0.0;
    r.v = g.bernoulli(ps) ? 1.0 : 0.0;
  } else {
    r.c = g.normal();
    r.a = g.bernoulli(spec.propensity(r.c)) ? 1 : 0;
    const int a_for_y = forced_arm < 0 ? r.a : forced_arm;
    r.y = g.bernoulli(spec.outcome_prob(a_for_y, r.c)) ? 1 : 0;
    const auto& m = spec.mixed;
    r.w = m.w_map[0] + m.w_map[1] * r.y + m.noise_sd * g.normal();
    r.z = m.z_map[0] + m.z_map[1] * r.y + m.noise_sd * g.normal();
    r.v = m.v_map[0] + m.v_map[1] * r.y + m.noise_sd * g.normal();
  }
  return r;
}

std::vector<FullRecord> simulate_impl(const DgpSpec& spec, std::size_t n, std::uint64_t seed,
                                      int forced_arm) {
  spec.validate();
  if (n == 0) fail("empty-sample", "simulate requires n >= 1");
  std::vector<FullRecord> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    SplitMix64 g = substream(seed, i);
    out[i] = draw_record(spec, g, forced_arm);
  }
  return out;
}

}  // namespace

std::vector<FullRecord> simulate(const DgpSpec& spec, std::size_t n, std::uint64_t seed) {
  return simulate_impl(spec, n, seed, -1);
}

std::vector<FullRecord> simulate_intervened(const DgpSpec& spec, std::size_t n,
                                            std::uint64_t seed, int arm) {
  if (arm != 0 && arm != 1) fail("config", "intervention arm must be 0 or 1");
  return simulate_impl(spec, n, seed, arm);
}

TrueTargets true_targets(const DgpSpec& spec) {
  spec.validate();
  TrueTargets t;
  if (spec.kind == DgpKind::Binary) {
    const double pc = spec.binary.p_c;
    auto psi = [&](int a) {
      return (1.0 - pc) * spec.outcome_prob(a, 0.0) + pc * spec.outcome_prob(a, 1.0);
    };
    t.psi1 = psi(1);
    t.psi0 = psi(0);
  } else {
    static const GaussHermiteRule rule = gauss_hermite(96);
    auto psi = [&](int a) {
      return normal_expectation(rule, [&](double c) { return spec.outcome_prob(a, c); });
    };
    t.psi1 = psi(1);
    t.psi0 = psi(0);
  }
  t.ate = t.psi1 - t.psi0;
  return t;
}

Tensor222 population_tensor(const DgpSpec& spec, const Stratum& stratum) {
  if (spec.kind != DgpKind::Binary)
    fail("unsupported-kind", "population_tensor is defined for the binary DGP only");
  spec.validate();

  // latent weight within the stratum; the global cell mixes over (A, C)
  double p1;
  if (stratum.is_global()) {
    const double pc = spec.binary.p_c;
    p1 = 0.0;
    for (int c = 0; c <= 1; ++c) {
      const double w_c = c == 1 ? pc : 1.0 - pc;
      const double pa = spec.propensity(c);
      p1 += w_c * (pa * spec.outcome_prob(1, c) + (1.0 - pa) * spec.outcome_prob(0, c));
    }
  } else {
    p1 = spec.outcome_prob(stratum.a, stratum.c);
  }

  const double succ[2] = {spec.binary.proxy_success[0], spec.binary.proxy_success[1]};
  auto pmf = [&](int x, int y) { return x == 1 ? succ[y] : 1.0 - succ[y]; };

  Tensor222 t{};
  for (int w = 0; w <= 1; ++w)
    for (int z = 0; z <= 1; ++z)
      for (int v = 0; v <= 1; ++v) {
        double s = 0;
        for (int y = 0; y <= 1; ++y) {
          const double py = y == 1 ? p1 : 1.0 - p1;
          s += py * pmf(w, y) * pmf(z, y) * pmf(v, y);
        }
        tensor_at(t, w, z, v) = s;
      }
  return t;
}

}  // namespace proxi
