#pragma once

#include <span>

#include "actnet/core/matrix.hpp"
#include "actnet/core/rng.hpp"

namespace actnet {

// Sine-activated MLP baseline. Hidden layers compute sin(omega0 (W z + b));
// the last layer is linear. Initialization follows the standard scheme:
// first layer uniform(-1/fan_in, 1/fan_in), later layers
// uniform(-sqrt(6/fan_in)/omega0, +sqrt(6/fan_in)/omega0), biases zero.
struct SirenParams {
  std::vector<int> widths;  // d_in, hidden..., d_out
  double omega0 = 30.0;
  std::vector<Matrix> w;  // per layer, fan_out x fan_in
  std::vector<Vector> b;  // per layer, fan_out
};

SirenParams init_siren(const std::vector<int>& widths, double omega0, Rng& rng);

Vector siren_forward(const SirenParams& p, const Vector& x);

// sum over layers of (fan_in + 1) * fan_out
std::size_t siren_param_count(const std::vector<int>& widths);

// Flatten order: per layer weights then bias, layers in order.
Vector siren_flatten(const SirenParams& p);
SirenParams siren_unflatten(const std::vector<int>& widths, double omega0,
                            std::span<const double> v);

}  // namespace actnet
