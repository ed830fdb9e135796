#pragma once

#include "actnet/autodiff/jet.hpp"
#include "actnet/core/matrix.hpp"

namespace actnet {

// Mean of Y = sin(omega X + phase) for X ~ N(0,1):  e^{-omega^2/2} sin(phase).
double basis_mu(double omega, double phase);

// Standard deviation of the same Y:
//   sqrt(1/2 - (1/2) e^{-2 omega^2} cos(2 phase) - mu^2),
// clamped at 0 when rounding drives the radicand negative.
double basis_sigma(double omega, double phase);

// Partials of mu and sigma with respect to (omega, phase); sigma partials
// are 0 at degenerate (sigma == 0) points.
struct BasisStatGrads {
  double mu_w, mu_p, sigma_w, sigma_p;
};
BasisStatGrads basis_stat_grads(double omega, double phase);

// Bank of N normalized sinusoidal basis functions
//   b_i(t) = (sin(omega_i t + phase_i) - mu_i) / (sigma_i + eps).
// mu/sigma are recomputed from the current (omega, phase) whenever the bank
// is trainable; a frozen bank caches them.
struct SinBasis {
  Vector omega;
  Vector phase;
  double eps = 1e-4;
  bool trainable = true;

  SinBasis() = default;
  SinBasis(Vector omega_, Vector phase_, double eps_ = 1e-4, bool trainable_ = true);

  int size() const { return static_cast<int>(omega.size()); }

  // Current normalization constants; cached when frozen.
  struct Stats {
    Vector mu, sigma, inv;  // inv = 1/(sigma + eps)
  };
  const Stats& stats() const;
  void invalidate_cache() { cache_valid_ = false; }

 private:
  mutable Stats cache_;
  mutable bool cache_valid_ = false;
};

// Basis expansion matrix B with B(i,j) = b_i(x[j]); N x d.
Matrix eval_basis(const SinBasis& b, const Vector& x);

// Derivatives d^k b_i / dt^k at t = x[coord] for k = 0..order (order <= 4),
// returned as an N x (order+1) matrix. Uses the analytic derivative cycle
// sin -> cos -> -sin -> -cos scaled by omega^k; the mu shift only affects
// order 0.
Matrix eval_basis_jet(const SinBasis& b, const Vector& x, int coord, int order);

// Jet of one normalized basis function at a jet-valued argument.
Jet eval_basis_fn(double omega, double phase, double mu, double inv, const Jet& t);

}  // namespace actnet
