#include "proxi/logistic.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "proxi/errors.hpp"
#include "proxi/math.hpp"

namespace proxi {

namespace {

double log_lik(const Eigen::MatrixXd& x, const std::vector<int>& y, const Eigen::VectorXd& beta) {
  double ll = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double eta = x.row(i).dot(beta);
    // log p(y | eta) = y eta - log(1 + e^eta), stable form
    ll += y[static_cast<std::size_t>(i)] * eta - (eta > 0 ? eta + std::log1p(std::exp(-eta))
                                                          : std::log1p(std::exp(eta)));
  }
  return ll;
}

}  // namespace

std::vector<double> logistic_mle(const std::vector<std::vector<double>>& x,
                                 const std::vector<int>& y, double grad_tol, int max_iter) {
  if (x.empty() || x.size() != y.size()) fail("config", "logistic_mle: bad design");
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index p = static_cast<Eigen::Index>(x[0].size());
  Eigen::MatrixXd design(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) design(i, j) = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  double ll = log_lik(design, y, beta);

  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(p);
    Eigen::MatrixXd info = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double pi = expit(design.row(i).dot(beta));
      grad += (y[static_cast<std::size_t>(i)] - pi) * design.row(i).transpose();
      info += pi * (1.0 - pi) * design.row(i).transpose() * design.row(i);
    }
    if (grad.lpNorm<Eigen::Infinity>() < grad_tol) {
      std::vector<double> out(static_cast<std::size_t>(p));
      for (Eigen::Index j = 0; j < p; ++j) out[static_cast<std::size_t>(j)] = beta(j);
      return out;
    }
    Eigen::VectorXd step = info.ldlt().solve(grad);
    double t = 1.0;
    // halve until the likelihood does not decrease
    for (int h = 0; h < 40; ++h) {
      const double cand = log_lik(design, y, beta + t * step);
      if (cand >= ll - 1e-12) {
        beta += t * step;
        ll = cand;
        break;
      }
      t /= 2.0;
      if (h == 39) fail("optimization", "logistic_mle: line search failed");
    }
  }
  fail("optimization", "logistic_mle did not converge in " + std::to_string(max_iter) +
                           " iterations");
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& x,
                                  const std::vector<double>& y) {
  if (x.empty() || x.size() != y.size()) fail("config", "least_squares: bad design");
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index p = static_cast<Eigen::Index>(x[0].size());
  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd target(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    target(i) = y[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < p; ++j) design(i, j) = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Eigen::VectorXd beta = (design.transpose() * design).ldlt().solve(design.transpose() * target);
  std::vector<double> out(static_cast<std::size_t>(p));
  for (Eigen::Index j = 0; j < p; ++j) out[static_cast<std::size_t>(j)] = beta(j);
  return out;
}

}  // namespace proxi
