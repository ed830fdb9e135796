#pragma once

// Internal: offsets of each tensor inside the flat parameter vector.
// Must mirror flatten_params()/siren_flatten() exactly.

#include <cstddef>
#include <vector>

#include "actnet/model/actnet.hpp"
#include "actnet/model/siren.hpp"

namespace actnet::detail {

struct ActNetLayerOffsets {
  std::size_t beta, lambda, omega, phase, bias;
};

struct ActNetOffsets {
  std::size_t w_in, b_in, w_out, b_out, total;
  std::vector<ActNetLayerOffsets> layers;

  explicit ActNetOffsets(const ArchSpec& s) {
    const std::size_t m = s.m, N = s.N;
    std::size_t pos = 0;
    w_in = pos;
    pos += m * s.d_in;
    b_in = pos;
    pos += m;
    layers.reserve(s.L);
    for (int l = 0; l < s.L; ++l) {
      ActNetLayerOffsets lo{};
      lo.beta = pos;
      pos += m * N;
      lo.lambda = pos;
      pos += m * m;
      lo.omega = pos;
      pos += N;
      lo.phase = pos;
      pos += N;
      lo.bias = pos;
      if (s.layer_bias) pos += m;
      layers.push_back(lo);
    }
    w_out = pos;
    pos += static_cast<std::size_t>(s.d_out) * m;
    b_out = pos;
    pos += s.d_out;
    total = pos;
  }
};

struct SirenOffsets {
  struct Layer {
    std::size_t w, b;
  };
  std::vector<Layer> layers;
  std::size_t total;

  explicit SirenOffsets(const std::vector<int>& widths) {
    std::size_t pos = 0;
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
      Layer lo{};
      lo.w = pos;
      pos += static_cast<std::size_t>(widths[l]) * widths[l + 1];
      lo.b = pos;
      pos += widths[l + 1];
      layers.push_back(lo);
    }
    total = pos;
  }
};

}  // namespace actnet::detail
