#include "proxi/em.hpp"

#include <algorithm>
#include <cmath>

#include "proxi/errors.hpp"
#include "proxi/math.hpp"
#include "proxi/rng.hpp"

namespace proxi {

namespace {

constexpr double kCollapseProb = 1e-4;
constexpr double kCollapseSd = 1e-4;
// 13 free parameters: class weight + (mean, sd) per proxy per class
constexpr std::size_t kMinSamples = 130;

struct MixtureParams {
  double pi1 = 0.5;                  // p(Y = 1)
  double mu[3][2]{}, sd[3][2]{};     // [proxy][class]

  bool collapsed() const {
    if (pi1 < kCollapseProb || pi1 > 1.0 - kCollapseProb) return true;
    for (int p = 0; p < 3; ++p)
      for (int y = 0; y < 2; ++y)
        if (sd[p][y] < kCollapseSd) return true;
    return false;
  }
};

double proxy_value(const ObservedRecord& o, int p) { return p == 0 ? o.w : (p == 1 ? o.z : o.v); }

// E-step: per-record class-1 responsibilities plus the observed log-likelihood.
double e_step(const std::vector<ObservedRecord>& records, const MixtureParams& par,
              std::vector<double>& resp1) {
  const double lp1 = std::log(par.pi1), lp0 = std::log1p(-par.pi1);
  double ll = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    double l0 = lp0, l1 = lp1;
    for (int p = 0; p < 3; ++p) {
      const double x = proxy_value(records[i], p);
      l0 += normal_logpdf(x, par.mu[p][0], par.sd[p][0]);
      l1 += normal_logpdf(x, par.mu[p][1], par.sd[p][1]);
    }
    const double m = std::max(l0, l1);
    const double lse = m + std::log(std::exp(l0 - m) + std::exp(l1 - m));
    ll += lse;
    resp1[i] = std::exp(l1 - lse);
  }
  return ll;
}

MixtureParams m_step(const std::vector<ObservedRecord>& records,
                     const std::vector<double>& resp1) {
  const double n = static_cast<double>(records.size());
  double s1 = 0;
  for (double r : resp1) s1 += r;
  MixtureParams par;
  par.pi1 = s1 / n;
  for (int p = 0; p < 3; ++p) {
    double sum[2] = {0, 0}, sumsq[2] = {0, 0}, w[2] = {n - s1, s1};
    for (std::size_t i = 0; i < records.size(); ++i) {
      const double x = proxy_value(records[i], p);
      sum[1] += resp1[i] * x;
      sum[0] += (1.0 - resp1[i]) * x;
      sumsq[1] += resp1[i] * x * x;
      sumsq[0] += (1.0 - resp1[i]) * x * x;
    }
    for (int y = 0; y < 2; ++y) {
      if (w[y] <= 0.0) {
        par.mu[p][y] = 0.0;
        par.sd[p][y] = 0.0;
        continue;
      }
      par.mu[p][y] = sum[y] / w[y];
      const double var = std::max(0.0, sumsq[y] / w[y] - par.mu[p][y] * par.mu[p][y]);
      par.sd[p][y] = std::sqrt(var);
    }
  }
  return par;
}

LatentLaw to_law(const MixtureParams& par) {
  LatentLaw law;
  law.stratum = Stratum::global();
  law.class_probs = {1.0 - par.pi1, par.pi1};
  for (int p = 0; p < 3; ++p)
    law.proxies[p] =
        ProxyLaw::gaussian({par.mu[p][0], par.mu[p][1]}, {par.sd[p][0], par.sd[p][1]});
  return law;
}

enum class RestartStatus { Converged, Collapsed, NoConvergence };

struct RestartOutcome {
  RestartStatus status = RestartStatus::NoConvergence;
  MixtureParams params;
  std::vector<double> trace;
};

RestartOutcome run_restart(const std::vector<ObservedRecord>& records, const EmConfig& cfg,
                           std::vector<double> resp1) {
  RestartOutcome out;
  MixtureParams par = m_step(records, resp1);
  if (par.collapsed()) {
    out.status = RestartStatus::Collapsed;
    return out;
  }
  double prev_ll = -HUGE_VAL;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double ll = e_step(records, par, resp1);
    out.trace.push_back(ll);
    if (it > 0 && std::abs(ll - prev_ll) <= cfg.tol * (std::abs(prev_ll) + 1e-3)) {
      out.status = RestartStatus::Converged;
      out.params = par;
      return out;
    }
    prev_ll = ll;
    par = m_step(records, resp1);
    if (par.collapsed()) {
      out.status = RestartStatus::Collapsed;
      return out;
    }
  }
  out.status = RestartStatus::NoConvergence;
  out.params = par;
  return out;
}

}  // namespace

void EmConfig::validate() const {
  if (n_classes != 2) fail("config", "em_fit_mixture supports two latent classes");
  if (max_iter < 1) fail("config", "EM max_iter must be >= 1");
  if (!(tol > 0)) fail("config", "EM tolerance must be positive");
  if (n_restarts < 1) fail("config", "EM needs at least one restart");
}

double mixture_log_lik(const std::vector<ObservedRecord>& records, const LatentLaw& law) {
  double ll = 0;
  for (const auto& o : records) {
    const double xs[3] = {o.w, o.z, o.v};
    double acc = 0;
    for (int y = 0; y < law.n_classes(); ++y) {
      double term = law.class_probs[y];
      for (int p = 0; p < 3; ++p)
        term *= normal_pdf(xs[p], law.proxies[p].mean[y], law.proxies[p].sd[y]);
      acc += term;
    }
    ll += std::log(acc);
  }
  return ll;
}

LatentLaw em_fit_mixture(const std::vector<ObservedRecord>& records, const EmConfig& cfg,
                         EmTrace* trace_out) {
  cfg.validate();
  if (records.size() < kMinSamples)
    fail("insufficient-data", "em_fit_mixture needs at least " + std::to_string(kMinSamples) +
                                  " records, got " + std::to_string(records.size()));

  // median of W for the split initialization
  std::vector<double> ws(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) ws[i] = records[i].w;
  std::vector<double> sorted = ws;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const double med = sorted[sorted.size() / 2];

  int best_restart = -1;
  RestartOutcome best;
  std::vector<double> best_failed_trace;
  bool any_collapsed = false;

  for (int restart = 0; restart < cfg.n_restarts; ++restart) {
    std::vector<double> resp1(records.size());
    if (restart == 0) {
      for (std::size_t i = 0; i < records.size(); ++i) resp1[i] = ws[i] > med ? 0.9 : 0.1;
    } else {
      SplitMix64 g = substream(cfg.seed, static_cast<std::uint64_t>(restart));
      for (double& r : resp1) r = 0.1 + 0.8 * g.next_double();
    }

    RestartOutcome outcome = run_restart(records, cfg, std::move(resp1));
    if (outcome.status == RestartStatus::Collapsed) {
      any_collapsed = true;
      continue;
    }
    if (outcome.status == RestartStatus::NoConvergence) {
      if (best_failed_trace.empty() ||
          (!outcome.trace.empty() && outcome.trace.back() > best_failed_trace.back()))
        best_failed_trace = outcome.trace;
      continue;
    }
    if (best_restart < 0 || outcome.trace.back() > best.trace.back()) {
      best = std::move(outcome);
      best_restart = restart;
    }
  }

  if (best_restart < 0) {
    if (any_collapsed)
      fail("degenerate-component",
           "every EM restart collapsed a component (class prob or sd below 1e-4)");
    std::string msg = "EM did not converge within " + std::to_string(cfg.max_iter) +
                      " iterations in any restart";
    if (!best_failed_trace.empty())
      msg += "; best final log-likelihood " + std::to_string(best_failed_trace.back());
    fail("convergence", msg);
  }

  if (trace_out) {
    trace_out->log_lik = best.trace;
    trace_out->restart = best_restart;
    trace_out->converged = true;
  }
  return align_labels(to_law(best.params), Proxy::W);
}

}  // namespace proxi
