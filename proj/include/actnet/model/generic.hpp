#pragma once

// Scalar-type-generic mirrors of the network forward passes. The same body
// evaluates with plain doubles, with jets (directional derivatives), or on
// a tape (parameter gradients), so every engine shares one source of truth
// for the network semantics. The batched training engines are separate fast
// paths equivalence-tested against these.

#include <cmath>
#include <vector>

#include "actnet/autodiff/tape.hpp"
#include "actnet/model/actnet.hpp"
#include "actnet/model/siren.hpp"

namespace actnet {

inline double make_like(double, double v) { return v; }
inline Jet make_like(const Jet& ref, double v) { return Jet::constant(v, ref.order()); }
inline Var make_like(const Var& ref, double v) { return ref.tape->constant(v, 0); }

template <class S>
struct TypedBasis {
  std::vector<S> omega, phase;
  double eps = 1e-4;
};

template <class S>
struct TypedActLayer {
  int d = 0, m = 0, N = 0;
  std::vector<S> beta;    // m*N row-major
  std::vector<S> lambda;  // m*d row-major
  std::vector<S> bias;    // m or empty
  TypedBasis<S> basis;
};

template <class S>
struct TypedActNet {
  ArchSpec spec;
  std::vector<S> w_in, b_in;  // m*d_in, m
  std::vector<TypedActLayer<S>> layers;
  std::vector<S> w_out, b_out;  // d_out*m, d_out
};

template <class S>
struct TypedSiren {
  std::vector<int> widths;
  double omega0 = 30.0;
  std::vector<std::vector<S>> w;  // per layer, fan_out*fan_in row-major
  std::vector<std::vector<S>> b;  // per layer, fan_out
};

TypedActNet<double> typed_actnet(const ActNetParams& p);
TypedSiren<double> typed_siren(const SirenParams& p);

// Tape leaves in flatten order. `active[i]` is false for parameters that are
// recorded but frozen (omega/phase of a non-trainable basis): their
// gradient reads as zero.
struct TapedParams {
  std::vector<Var> leaves;
  std::vector<bool> active;
};
TypedActNet<Var> typed_actnet_leaves(Tape& tape, const ActNetParams& p, TapedParams& out);
TypedSiren<Var> typed_siren_leaves(Tape& tape, const SirenParams& p, TapedParams& out);

// Normalization constants (mu_j, 1/(sigma_j+eps)) from the current
// frequencies/phases, in the scalar algebra of S.
template <class S>
void basis_stats_typed(const TypedBasis<S>& basis, std::vector<S>& mu, std::vector<S>& inv) {
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sqrt;
  const int N = static_cast<int>(basis.omega.size());
  mu.clear();
  inv.clear();
  mu.reserve(N);
  inv.reserve(N);
  for (int j = 0; j < N; ++j) {
    const S& om = basis.omega[j];
    const S& ph = basis.phase[j];
    S mu_j = exp(om * om * (-0.5)) * sin(ph);
    S rad = make_like(om, 0.5) - exp(om * om * (-2.0)) * cos(ph * 2.0) * 0.5 - mu_j * mu_j;
    S sig = value_of(rad) > 0.0 ? sqrt(rad) : make_like(om, 0.0);
    S inv_j = make_like(om, 1.0) / (sig + basis.eps);
    mu.push_back(std::move(mu_j));
    inv.push_back(std::move(inv_j));
  }
}

template <class S, class T>
std::vector<T> actlayer_forward_typed(const TypedActLayer<S>& layer, const std::vector<T>& x) {
  using std::sin;
  std::vector<S> mu, inv;
  basis_stats_typed(layer.basis, mu, inv);
  // b(j,i) = (sin(omega_j x_i + p_j) - mu_j) * inv_j
  std::vector<T> bvals;
  bvals.reserve(static_cast<std::size_t>(layer.N) * layer.d);
  for (int j = 0; j < layer.N; ++j)
    for (int i = 0; i < layer.d; ++i)
      bvals.push_back((sin(x[i] * layer.basis.omega[j] + layer.basis.phase[j]) - mu[j]) * inv[j]);
  std::vector<T> out;
  out.reserve(layer.m);
  for (int k = 0; k < layer.m; ++k) {
    T acc = make_like(x[0], 0.0);
    for (int i = 0; i < layer.d; ++i) {
      T phi = make_like(x[0], 0.0);
      for (int j = 0; j < layer.N; ++j)
        phi = phi + bvals[static_cast<std::size_t>(j) * layer.d + i] * layer.beta[static_cast<std::size_t>(k) * layer.N + j];
      acc = acc + phi * layer.lambda[static_cast<std::size_t>(k) * layer.d + i];
    }
    if (!layer.bias.empty()) acc = acc + layer.bias[k];
    out.push_back(std::move(acc));
  }
  return out;
}

template <class S, class T>
std::vector<T> affine_typed(const std::vector<S>& w, const std::vector<S>& b, int rows, int cols,
                            const std::vector<T>& x) {
  std::vector<T> out;
  out.reserve(rows);
  for (int i = 0; i < rows; ++i) {
    T acc = x[0] * w[static_cast<std::size_t>(i) * cols];
    for (int j = 1; j < cols; ++j) acc = acc + x[j] * w[static_cast<std::size_t>(i) * cols + j];
    if (!b.empty()) acc = acc + b[i];
    out.push_back(std::move(acc));
  }
  return out;
}

template <class S, class T>
std::vector<T> actnet_forward_typed(const TypedActNet<S>& net, const std::vector<T>& x) {
  std::vector<T> z;
  z.reserve(x.size());
  for (const auto& xi : x) z.push_back(xi * net.spec.omega0);
  z = affine_typed(net.w_in, net.b_in, net.spec.m, net.spec.d_in, z);
  for (const auto& layer : net.layers) z = actlayer_forward_typed(layer, z);
  return affine_typed(net.w_out, net.b_out, net.spec.d_out, net.spec.m, z);
}

template <class S, class T>
std::vector<T> siren_forward_typed(const TypedSiren<S>& net, const std::vector<T>& x) {
  using std::sin;
  std::vector<T> z = x;
  const int n_layers = static_cast<int>(net.w.size());
  for (int l = 0; l < n_layers; ++l) {
    const int rows = net.widths[l + 1], cols = net.widths[l];
    z = affine_typed(net.w[l], net.b[l], rows, cols, z);
    if (l + 1 < n_layers)
      for (auto& v : z) v = sin(v * net.omega0);
  }
  return z;
}

}  // namespace actnet
