#include "actnet/basis/sin_basis.hpp"

#include <cmath>

namespace actnet {

double basis_mu(double omega, double phase) {
  return std::exp(-0.5 * omega * omega) * std::sin(phase);
}

double basis_sigma(double omega, double phase) {
  const double mu = basis_mu(omega, phase);
  const double rad = 0.5 - 0.5 * std::exp(-2.0 * omega * omega) * std::cos(2.0 * phase) - mu * mu;
  return rad > 0.0 ? std::sqrt(rad) : 0.0;
}

BasisStatGrads basis_stat_grads(double omega, double phase) {
  const double g = std::exp(-0.5 * omega * omega);
  const double mu = g * std::sin(phase);
  const double e2 = std::exp(-2.0 * omega * omega);
  BasisStatGrads out;
  out.mu_w = -omega * mu;
  out.mu_p = g * std::cos(phase);
  const double sigma = basis_sigma(omega, phase);
  if (sigma < 1e-12) {
    out.sigma_w = 0.0;
    out.sigma_p = 0.0;
  } else {
    // d(sigma^2)/dw = 2w (e^{-2w^2} cos 2p + mu^2),  d(sigma^2)/dp = e^{-2w^2} sin 2p - 2 mu mu_p
    out.sigma_w = omega * (e2 * std::cos(2.0 * phase) + mu * mu) / sigma;
    out.sigma_p = (0.5 * e2 * std::sin(2.0 * phase) - mu * out.mu_p) / sigma;
  }
  return out;
}

SinBasis::SinBasis(Vector omega_, Vector phase_, double eps_, bool trainable_)
    : omega(std::move(omega_)), phase(std::move(phase_)), eps(eps_), trainable(trainable_) {
  if (omega.size() != phase.size()) throw DimensionError("SinBasis: omega/phase length mismatch");
  if (omega.empty()) throw ArgumentError("SinBasis: needs at least one basis function");
  if (eps <= 0.0) throw ArgumentError("SinBasis: eps must be positive");
}

const SinBasis::Stats& SinBasis::stats() const {
  if (!trainable && cache_valid_) return cache_;
  const int n = size();
  cache_.mu.resize(n);
  cache_.sigma.resize(n);
  cache_.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    cache_.mu[i] = basis_mu(omega[i], phase[i]);
    cache_.sigma[i] = basis_sigma(omega[i], phase[i]);
    cache_.inv[i] = 1.0 / (cache_.sigma[i] + eps);
  }
  cache_valid_ = true;
  return cache_;
}

Matrix eval_basis(const SinBasis& b, const Vector& x) {
  const auto& st = b.stats();
  const int n = b.size();
  const int d = static_cast<int>(x.size());
  Matrix out(n, d);
  for (int i = 0; i < n; ++i) {
    double* row = out.row(i);
    for (int j = 0; j < d; ++j)
      row[j] = (std::sin(b.omega[i] * x[j] + b.phase[i]) - st.mu[i]) * st.inv[i];
  }
  return out;
}

Matrix eval_basis_jet(const SinBasis& b, const Vector& x, int coord, int order) {
  if (order < 0 || order > kMaxJetOrder)
    throw ArgumentError("eval_basis_jet: order must be in [0, 4]");
  if (coord < 0 || coord >= static_cast<int>(x.size()))
    throw ArgumentError("eval_basis_jet: coord out of range");
  const auto& st = b.stats();
  const int n = b.size();
  const double t = x[coord];
  Matrix out(n, order + 1);
  for (int i = 0; i < n; ++i) {
    const double w = b.omega[i];
    const double arg = w * t + b.phase[i];
    const double s = std::sin(arg), c = std::cos(arg);
    // derivative cycle of sin: sin, cos, -sin, -cos, sin, ...
    const double cycle[4] = {s, c, -s, -c};
    double wk = 1.0;
    double* row = out.row(i);
    for (int k = 0; k <= order; ++k) {
      const double shift = k == 0 ? st.mu[i] : 0.0;
      row[k] = (cycle[k % 4] * wk - shift) * st.inv[i];
      wk *= w;
    }
  }
  return out;
}

Jet eval_basis_fn(double omega, double phase, double mu, double inv, const Jet& t) {
  return (sin(t * omega + phase) - mu) * inv;
}

}  // namespace actnet
