#include "proxi/recovery.hpp"

#include <cmath>

#include "proxi/errors.hpp"

namespace proxi {

namespace {

constexpr double kProbClip = 1e-8;
constexpr double kCondLimit = 1e10;
constexpr double kEigenGapMin = 1e-10;

bool is_binary(double x) { return x == 0.0 || x == 1.0; }

// clip into [kProbClip, 1-kProbClip] and renormalize to sum one
void clip_renorm(double* p, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) {
    if (p[i] < kProbClip) p[i] = kProbClip;
    if (p[i] > 1.0 - kProbClip) p[i] = 1.0 - kProbClip;
    s += p[i];
  }
  for (int i = 0; i < n; ++i) p[i] /= s;
}

struct Mat2 {
  // row-major 2x2
  double a00, a01, a10, a11;

  double det() const { return a00 * a11 - a01 * a10; }
  double norm1() const {
    return std::max(std::abs(a00) + std::abs(a10), std::abs(a01) + std::abs(a11));
  }
  Mat2 inverse() const {
    const double d = det();
    return {a11 / d, -a01 / d, -a10 / d, a00 / d};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
};

}  // namespace

Tensor222 build_tensor(const std::vector<ObservedRecord>& records, const Stratum& stratum) {
  Tensor222 t{};
  std::size_t count = 0;
  for (const auto& o : records) {
    if (!stratum.contains(o)) continue;
    if (!is_binary(o.w) || !is_binary(o.z) || !is_binary(o.v))
      fail("invalid-record", "build_tensor requires binary proxies");
    tensor_at(t, static_cast<int>(o.w), static_cast<int>(o.z), static_cast<int>(o.v)) += 1.0;
    ++count;
  }
  if (count == 0)
    fail("insufficient-data", "no records in stratum " + stratum.label());
  for (double& v : t) v /= static_cast<double>(count);
  return t;
}

LatentLaw spectral_recover(const Tensor222& tensor, const Stratum& stratum) {
  // V-marginal and V=1 slice, indexed (w, z)
  const Mat2 m{tensor_at(tensor, 0, 0, 0) + tensor_at(tensor, 0, 0, 1),
               tensor_at(tensor, 0, 1, 0) + tensor_at(tensor, 0, 1, 1),
               tensor_at(tensor, 1, 0, 0) + tensor_at(tensor, 1, 0, 1),
               tensor_at(tensor, 1, 1, 0) + tensor_at(tensor, 1, 1, 1)};
  const Mat2 m1{tensor_at(tensor, 0, 0, 1), tensor_at(tensor, 0, 1, 1),
                tensor_at(tensor, 1, 0, 1), tensor_at(tensor, 1, 1, 1)};

  const double det = m.det();
  if (det == 0.0 || m.norm1() * m.inverse().norm1() > kCondLimit)
    fail("degenerate-tensor",
         "V-marginal of the tensor is numerically singular in stratum " + stratum.label());

  const Mat2 e = m1 * m.inverse();

  const double tr = e.a00 + e.a11;
  const double disc = tr * tr - 4.0 * e.det();
  if (disc < 0.0)
    fail("eigen-separation",
         "complex eigenvalues of the V-slice operator (distinctness fails in-sample) in stratum " +
             stratum.label());
  const double root = std::sqrt(disc);
  double lam[2] = {(tr - root) / 2.0, (tr + root) / 2.0};
  if (lam[1] - lam[0] < kEigenGapMin)
    fail("eigen-separation",
         "eigenvalue gap below 1e-10 (distinctness fails in-sample) in stratum " + stratum.label());

  // eigenvector for each lambda: a nonzero column of adj(E - lambda I)
  double lw[2][2];  // lw[w][class]
  for (int k = 0; k < 2; ++k) {
    double v0 = e.a01, v1 = lam[k] - e.a00;
    const double alt0 = lam[k] - e.a11, alt1 = e.a10;
    if (std::abs(v0) + std::abs(v1) < std::abs(alt0) + std::abs(alt1)) {
      v0 = alt0;
      v1 = alt1;
    }
    const double s = v0 + v1;
    if (s == 0.0)
      fail("degenerate-tensor", "eigenvector not normalizable in stratum " + stratum.label());
    double col[2] = {v0 / s, v1 / s};
    clip_renorm(col, 2);
    lw[0][k] = col[0];
    lw[1][k] = col[1];
  }

  // Lw^-1 M = diag(p) Lz^T
  const Mat2 lw_mat{lw[0][0], lw[0][1], lw[1][0], lw[1][1]};
  const double lw_det = lw_mat.det();
  if (std::abs(lw_det) < 1e-12)
    fail("eigen-separation", "recovered W columns are collinear in stratum " + stratum.label());
  const Mat2 dz = lw_mat.inverse() * m;

  double py[2] = {dz.a00 + dz.a01, dz.a10 + dz.a11};
  clip_renorm(py, 2);

  double pz[2][2];  // [class][z]
  pz[0][0] = dz.a00 / py[0];
  pz[0][1] = dz.a01 / py[0];
  pz[1][0] = dz.a10 / py[1];
  pz[1][1] = dz.a11 / py[1];
  clip_renorm(pz[0], 2);
  clip_renorm(pz[1], 2);

  double pv[2] = {lam[0], lam[1]};
  for (double& x : pv) x = std::min(1.0 - kProbClip, std::max(kProbClip, x));

  LatentLaw law;
  law.stratum = stratum;
  law.class_probs = {py[0], py[1]};
  law.proxies[0] = ProxyLaw::bernoulli({lw[1][0], lw[1][1]});
  law.proxies[1] = ProxyLaw::bernoulli({pz[0][1], pz[1][1]});
  law.proxies[2] = ProxyLaw::bernoulli({pv[0], pv[1]});
  law.validate();
  return law;
}

StratifiedRecovery recover_stratified(const std::vector<ObservedRecord>& records,
                                      const std::vector<Stratum>& strata) {
  StratifiedRecovery out;
  for (const auto& s : strata) {
    if (s.is_global() || s.c < 0 || s.c > 1 || s.a < 0 || s.a > 1)
      fail("config", "recover_stratified expects binary (a, c) cells");
    LatentLaw law;
    try {
      law = align_labels(spectral_recover(build_tensor(records, s), s));
    } catch (const Error& e) {
      std::string msg = e.what();
      if (msg.find(s.label()) == std::string::npos) msg += " in stratum " + s.label();
      fail(e.name(), msg);
    }
    out.p_y1[s.a][s.c] = law.class_probs[1];
    out.per_stratum.emplace(s, std::move(law));
  }
  return out;
}

}  // namespace proxi
