#pragma once

#include <array>
#include <vector>

#include "proxi/latent_law.hpp"

namespace proxi {

// A scalar function on a proxy's support: a value table on discrete levels
// or a polynomial in the proxy value.
struct BasisFunction {
  bool discrete = false;
  std::vector<double> support;  // discrete levels
  std::vector<double> values;   // table per level, or polynomial coefficients

  double operator()(double x) const;
  static BasisFunction identity();
};

// One evaluable function per latent class and proxy. In the binary-outcome
// case every entry is the identity; the weight formula pairs class j's
// function with centering at class j's conditional moment.
struct WeightBasis {
  int n_classes = 2;
  std::array<std::vector<BasisFunction>, 3> fns;  // [proxy][class]

  static WeightBasis identity_basis(int n_classes);
  const BasisFunction& fn(Proxy p, int cls) const { return fns[static_cast<int>(p)][cls]; }
};

// Basis construction for K >= 3 on discrete proxies. Class 0 keeps the
// identity; each later class function is solved sequentially in the span of
// support-level indicators so that every pair (j, j') of distinct class
// functions has zero conditional covariance at each class outside {j, j'},
// under the supplied law. Cross-class moment gaps below 1e-8 are rejected.
WeightBasis build_weight_basis(const LatentLaw& law, int n_classes);

// E[ b(X) | Y=y ] under a proxy law.
double basis_conditional_moment(const BasisFunction& fn, const ProxyLaw& law, int y);

}  // namespace proxi
