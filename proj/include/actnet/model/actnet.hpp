#pragma once

#include <cstdint>
#include <span>

#include "actnet/basis/sin_basis.hpp"
#include "actnet/core/matrix.hpp"
#include "actnet/core/rng.hpp"

namespace actnet {

// Architecture hyperparameters. Layers operate at the embedding dimension m,
// with N basis functions each; omega0 scales the raw input before the input
// projection.
struct ArchSpec {
  int d_in = 1;
  int d_out = 1;
  int m = 32;
  int N = 4;
  int L = 2;
  double omega0 = 1.0;
  bool layer_bias = true;
  bool trainable_basis = true;

  void validate() const;
  bool operator==(const ArchSpec&) const = default;
};

// One layer: out = row_sums(Lambda (.) beta B(x)) + bias, with
// beta in R^{m x N}, Lambda in R^{m x d}, B(x) in R^{N x d}.
struct ActLayerParams {
  Matrix beta;     // m x N
  Matrix lambda;   // m x d
  SinBasis basis;  // N frequencies/phases
  Vector bias;     // m, empty when disabled

  int d() const { return lambda.cols; }
  int m() const { return lambda.rows; }
  int n_basis() const { return beta.cols; }
};

struct ActNetParams {
  ArchSpec spec;
  Matrix w_in;   // m x d_in
  Vector b_in;   // m
  std::vector<ActLayerParams> layers;  // each d = m
  Matrix w_out;  // d_out x m
  Vector b_out;  // d_out
};

// Initialization: beta entries uniform with std 1/sqrt(N), Lambda uniform
// with std 1/sqrt(d), omega ~ N(0,1), phases and biases zero, projections
// uniform with std 1/sqrt(fan_in). Draw order is fixed (input projection,
// layers in order, output projection) so a seed pins every byte.
ActLayerParams init_actlayer(int d, int m, int N, Rng& rng, bool bias, bool trainable_basis);
ActNetParams init_actnet(const ArchSpec& spec, Rng& rng);

// Matrix-form forward pass of one layer (the row-sum/Hadamard path).
Vector actlayer_forward(const ActLayerParams& p, const Vector& x);

// Full network: out_proj( layers( in_proj(omega0 * x) ) ).
Vector actnet_forward(const ActNetParams& p, const Vector& x);

// Analytic Jacobian of one layer: J = Lambda (.) Phi'(x) with
// Phi'(k,l) = sum_j beta(k,j) b_j'(x_l). Independent of the jet engine.
Matrix actlayer_jacobian(const ActLayerParams& p, const Vector& x);

// Composed closed-form Jacobian of the full network at x (d_out x d_in).
Matrix actnet_jacobian(const ActNetParams& p, const Vector& x);

// Exact trainable-parameter count:
//   m*d_in + m  +  L*(m*N + m*m [+ m] + 2N)  +  d_out*m + d_out.
std::size_t param_count(const ArchSpec& spec);

// Multiply-add estimate for one forward pass (one point):
//   2*m*d_in + m  +  sum over layers of (4*N*m + 2*m*m*N + 2*m*m [+ m])
//   + 2*d_out*m + d_out;  asymptotically O(L m^2 N).
std::size_t flop_estimate(const ArchSpec& spec);

// Fixed flattening order: w_in, b_in, then per layer (beta, lambda, omega,
// phase, bias), then w_out, b_out. Checkpoints rely on this order.
Vector flatten_params(const ActNetParams& p);
ActNetParams unflatten_params(const ArchSpec& spec, std::span<const double> v);

}  // namespace actnet
