#include "actnet/model/siren.hpp"

#include <cmath>

namespace actnet {

SirenParams init_siren(const std::vector<int>& widths, double omega0, Rng& rng) {
  if (widths.size() < 2) throw ArgumentError("init_siren: need at least one layer");
  for (int w : widths)
    if (w < 1) throw ArgumentError("init_siren: widths must be >= 1");
  if (omega0 <= 0.0) throw ArgumentError("init_siren: omega0 must be positive");
  SirenParams p;
  p.widths = widths;
  p.omega0 = omega0;
  const int n_layers = static_cast<int>(widths.size()) - 1;
  for (int l = 0; l < n_layers; ++l) {
    const int fan_in = widths[l], fan_out = widths[l + 1];
    const double bound = l == 0 ? 1.0 / fan_in : std::sqrt(6.0 / fan_in) / omega0;
    Matrix w(fan_out, fan_in);
    for (auto& v : w.data) v = rng.uniform(-bound, bound);
    p.w.push_back(std::move(w));
    p.b.emplace_back(fan_out, 0.0);
  }
  return p;
}

Vector siren_forward(const SirenParams& p, const Vector& x) {
  if (static_cast<int>(x.size()) != p.widths.front())
    throw DimensionError("siren_forward: input length mismatch");
  Vector z = x;
  const int n_layers = static_cast<int>(p.w.size());
  for (int l = 0; l < n_layers; ++l) {
    const Matrix& w = p.w[l];
    Vector a(w.rows);
    for (int i = 0; i < w.rows; ++i) {
      const double* wi = w.row(i);
      double s = p.b[l][i];
      for (int j = 0; j < w.cols; ++j) s += wi[j] * z[j];
      a[i] = s;
    }
    if (l + 1 < n_layers)
      for (auto& v : a) v = std::sin(p.omega0 * v);
    z = std::move(a);
  }
  return z;
}

std::size_t siren_param_count(const std::vector<int>& widths) {
  std::size_t n = 0;
  for (std::size_t l = 0; l + 1 < widths.size(); ++l)
    n += (static_cast<std::size_t>(widths[l]) + 1) * widths[l + 1];
  return n;
}

Vector siren_flatten(const SirenParams& p) {
  Vector out;
  out.reserve(siren_param_count(p.widths));
  for (std::size_t l = 0; l < p.w.size(); ++l) {
    out.insert(out.end(), p.w[l].data.begin(), p.w[l].data.end());
    out.insert(out.end(), p.b[l].begin(), p.b[l].end());
  }
  return out;
}

SirenParams siren_unflatten(const std::vector<int>& widths, double omega0,
                            std::span<const double> v) {
  if (v.size() != siren_param_count(widths))
    throw FormatError("siren_unflatten: expected " + std::to_string(siren_param_count(widths)) +
                      " values, got " + std::to_string(v.size()));
  SirenParams p;
  p.widths = widths;
  p.omega0 = omega0;
  std::size_t pos = 0;
  for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
    const int fan_in = widths[l], fan_out = widths[l + 1];
    Matrix w(fan_out, fan_in);
    for (auto& x : w.data) x = v[pos++];
    p.w.push_back(std::move(w));
    Vector b(fan_out);
    for (auto& x : b) x = v[pos++];
    p.b.push_back(std::move(b));
  }
  return p;
}

}  // namespace actnet
