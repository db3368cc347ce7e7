#include "proxi/outcome_fit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "proxi/errors.hpp"
#include "proxi/math.hpp"

namespace proxi {

namespace {
constexpr double kGradTol = 1e-8;
constexpr int kMaxIter = 200;
}  // namespace

std::array<double, 3> fit_outcome_given_mixture(const std::vector<ObservedRecord>& records,
                                                const LatentLaw& law) {
  law.validate();
  if (law.n_classes() != 2 || law.proxies[0].discrete)
    fail("config", "fit_outcome_given_mixture expects a two-class gaussian law");
  if (records.empty()) fail("empty-sample", "fit_outcome_given_mixture needs data");

  const std::size_t n = records.size();
  // frozen measurement densities q_i(y) = p(w|y) p(z|y) p(v|y)
  std::vector<double> q0(n), q1(n);
  double max_contrast = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xs[3] = {records[i].w, records[i].z, records[i].v};
    double a0 = 0, a1 = 0;
    for (int p = 0; p < 3; ++p) {
      a0 += normal_logpdf(xs[p], law.proxies[p].mean[0], law.proxies[p].sd[0]);
      a1 += normal_logpdf(xs[p], law.proxies[p].mean[1], law.proxies[p].sd[1]);
    }
    q0[i] = std::exp(a0);
    q1[i] = std::exp(a1);
    if (q0[i] + q1[i] > 0)
      max_contrast = std::max(max_contrast, std::abs(q1[i] - q0[i]) / (q0[i] + q1[i]));
  }
  if (max_contrast < 1e-12)
    fail("optimization",
         "flat likelihood: measurement densities are identical across classes, Y not identified");

  auto log_lik = [&](const Eigen::Vector3d& beta) {
    double ll = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double eta = beta(0) + beta(1) * records[i].a + beta(2) * records[i].c;
      const double p = expit(eta);
      ll += std::log(q0[i] + p * (q1[i] - q0[i]));
    }
    return ll;
  };

  Eigen::Vector3d beta = Eigen::Vector3d::Zero();
  double ll = log_lik(beta);
  double grad_norm = HUGE_VAL;

  for (int it = 0; it < kMaxIter; ++it) {
    Eigen::Vector3d grad = Eigen::Vector3d::Zero();
    Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      const Eigen::Vector3d xi(1.0, static_cast<double>(records[i].a), records[i].c);
      const double p = expit(beta.dot(xi));
      const double dq = q1[i] - q0[i];
      const double denom = q0[i] + p * dq;
      const double pp = p * (1.0 - p);
      const double g = dq * pp / denom;
      // d/deta of g: quotient rule with denom' = dq * pp
      const double gprime = (dq * pp * (1.0 - 2.0 * p) * denom - dq * pp * dq * pp) /
                            (denom * denom);
      grad += g * xi;
      hess += gprime * xi * xi.transpose();
    }
    grad_norm = grad.lpNorm<Eigen::Infinity>();
    if (grad_norm < kGradTol) return {beta(0), beta(1), beta(2)};

    // damped Newton ascent; bump the ridge until the direction is usable
    Eigen::Vector3d step;
    double ridge = 0.0;
    for (;;) {
      Eigen::Matrix3d neg_h = -hess + ridge * Eigen::Matrix3d::Identity();
      Eigen::LLT<Eigen::Matrix3d> llt(neg_h);
      if (llt.info() == Eigen::Success) {
        step = llt.solve(grad);
        if (step.dot(grad) > 0) break;
      }
      ridge = ridge == 0.0 ? 1e-4 : ridge * 10.0;
      if (ridge > 1e8) fail("optimization", "outcome fit: cannot find an ascent direction");
    }

    double t = 1.0;
    bool moved = false;
    for (int h = 0; h < 50; ++h) {
      const double cand = log_lik(beta + t * step);
      if (cand >= ll + 1e-4 * t * grad.dot(step)) {
        beta += t * step;
        ll = cand;
        moved = true;
        break;
      }
      t /= 2.0;
    }
    if (!moved) fail("optimization", "outcome fit: line search failed to improve the likelihood");
  }
  fail("optimization", "outcome fit did not converge in " + std::to_string(kMaxIter) +
                           " iterations, gradient inf-norm " + std::to_string(grad_norm));
}

}  // namespace proxi
