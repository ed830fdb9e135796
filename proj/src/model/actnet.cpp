#include "actnet/model/actnet.hpp"

#include <cmath>

namespace actnet {

void ArchSpec::validate() const {
  if (d_in < 1 || d_out < 1 || m < 1 || N < 1) throw ArgumentError("ArchSpec: counts must be >= 1");
  if (L < 0) throw ArgumentError("ArchSpec: L must be >= 0");
  if (omega0 <= 0.0) throw ArgumentError("ArchSpec: omega0 must be positive");
}

namespace {

// Uniform with mean 0 and the requested std (half-width sqrt(3)*std).
void fill_uniform_std(Matrix& mat, double std, Rng& rng) {
  const double h = std::sqrt(3.0) * std;
  for (auto& v : mat.data) v = rng.uniform(-h, h);
}

}  // namespace

ActLayerParams init_actlayer(int d, int m, int N, Rng& rng, bool bias, bool trainable_basis) {
  ActLayerParams p;
  p.beta = Matrix(m, N);
  fill_uniform_std(p.beta, 1.0 / std::sqrt(static_cast<double>(N)), rng);
  p.lambda = Matrix(m, d);
  fill_uniform_std(p.lambda, 1.0 / std::sqrt(static_cast<double>(d)), rng);
  Vector omega(N), phase(N, 0.0);
  for (auto& w : omega) w = rng.normal();
  p.basis = SinBasis(std::move(omega), std::move(phase), 1e-4, trainable_basis);
  if (bias) p.bias.assign(m, 0.0);
  return p;
}

ActNetParams init_actnet(const ArchSpec& spec, Rng& rng) {
  spec.validate();
  ActNetParams p;
  p.spec = spec;
  p.w_in = Matrix(spec.m, spec.d_in);
  fill_uniform_std(p.w_in, 1.0 / std::sqrt(static_cast<double>(spec.d_in)), rng);
  p.b_in.assign(spec.m, 0.0);
  p.layers.reserve(spec.L);
  for (int l = 0; l < spec.L; ++l)
    p.layers.push_back(init_actlayer(spec.m, spec.m, spec.N, rng, spec.layer_bias, spec.trainable_basis));
  p.w_out = Matrix(spec.d_out, spec.m);
  fill_uniform_std(p.w_out, 1.0 / std::sqrt(static_cast<double>(spec.m)), rng);
  p.b_out.assign(spec.d_out, 0.0);
  return p;
}

Vector actlayer_forward(const ActLayerParams& p, const Vector& x) {
  if (static_cast<int>(x.size()) != p.d())
    throw DimensionError("actlayer_forward: input length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(p.d()));
  Vector out = row_sums(hadamard(p.lambda, matmul(p.beta, eval_basis(p.basis, x))));
  if (!p.bias.empty())
    for (int k = 0; k < p.m(); ++k) out[k] += p.bias[k];
  return out;
}

namespace {

Vector affine(const Matrix& w, const Vector& b, const Vector& x) {
  if (static_cast<int>(x.size()) != w.cols) throw DimensionError("affine: shape mismatch");
  Vector out(w.rows);
  for (int i = 0; i < w.rows; ++i) {
    const double* wi = w.row(i);
    double s = b.empty() ? 0.0 : b[i];
    for (int j = 0; j < w.cols; ++j) s += wi[j] * x[j];
    out[i] = s;
  }
  return out;
}

}  // namespace

Vector actnet_forward(const ActNetParams& p, const Vector& x) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = p.spec.omega0 * x[i];
  z = affine(p.w_in, p.b_in, z);
  for (const auto& layer : p.layers) z = actlayer_forward(layer, z);
  return affine(p.w_out, p.b_out, z);
}

Matrix actlayer_jacobian(const ActLayerParams& p, const Vector& x) {
  const auto& st = p.basis.stats();
  const int m = p.m(), d = p.d(), N = p.n_basis();
  // Phi'(k,l) = sum_j beta(k,j) omega_j cos(omega_j x_l + p_j) * inv_j
  Matrix dphi(N, d);
  for (int j = 0; j < N; ++j) {
    const double w = p.basis.omega[j];
    for (int l = 0; l < d; ++l)
      dphi.at(j, l) = w * std::cos(w * x[l] + p.basis.phase[j]) * st.inv[j];
  }
  Matrix jac = matmul(p.beta, dphi);  // m x d
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < d; ++l) jac.at(k, l) *= p.lambda.at(k, l);
  return jac;
}

Matrix actnet_jacobian(const ActNetParams& p, const Vector& x) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = p.spec.omega0 * x[i];
  // J = W_out * J_L * ... * J_1 * W_in * omega0, evaluated left to right
  // while carrying the activation forward.
  Matrix jac = p.w_in;
  for (auto& v : jac.data) v *= p.spec.omega0;
  z = affine(p.w_in, p.b_in, z);
  for (const auto& layer : p.layers) {
    jac = matmul(actlayer_jacobian(layer, z), jac);
    z = actlayer_forward(layer, z);
  }
  return matmul(p.w_out, jac);
}

std::size_t param_count(const ArchSpec& spec) {
  const std::size_t m = spec.m, N = spec.N;
  std::size_t per_layer = m * N + m * m + 2 * N + (spec.layer_bias ? m : 0);
  return m * spec.d_in + m + static_cast<std::size_t>(spec.L) * per_layer +
         static_cast<std::size_t>(spec.d_out) * m + spec.d_out;
}

std::size_t flop_estimate(const ArchSpec& spec) {
  const std::size_t m = spec.m, N = spec.N, d_in = spec.d_in, d_out = spec.d_out;
  const std::size_t basis = 4 * N * m;                  // N*d sin evaluations, d = m
  const std::size_t inner = 2 * m * m * N + 2 * m * m;  // beta*B, then Lambda (.) + row sums
  std::size_t per_layer = basis + inner + (spec.layer_bias ? m : 0);
  return 2 * m * d_in + m + static_cast<std::size_t>(spec.L) * per_layer + 2 * d_out * m + d_out;
}

namespace {

void append(Vector& out, const Matrix& m) { out.insert(out.end(), m.data.begin(), m.data.end()); }
void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

std::span<const double> take(std::span<const double>& v, std::size_t n) {
  auto head = v.subspan(0, n);
  v = v.subspan(n);
  return head;
}

Matrix take_matrix(std::span<const double>& v, int r, int c) {
  Matrix m(r, c);
  auto s = take(v, static_cast<std::size_t>(r) * c);
  std::copy(s.begin(), s.end(), m.data.begin());
  return m;
}

Vector take_vector(std::span<const double>& v, std::size_t n) {
  auto s = take(v, n);
  return Vector(s.begin(), s.end());
}

}  // namespace

Vector flatten_params(const ActNetParams& p) {
  Vector out;
  out.reserve(param_count(p.spec));
  append(out, p.w_in);
  append(out, p.b_in);
  for (const auto& l : p.layers) {
    append(out, l.beta);
    append(out, l.lambda);
    append(out, l.basis.omega);
    append(out, l.basis.phase);
    append(out, l.bias);
  }
  append(out, p.w_out);
  append(out, p.b_out);
  return out;
}

ActNetParams unflatten_params(const ArchSpec& spec, std::span<const double> v) {
  spec.validate();
  if (v.size() != param_count(spec))
    throw FormatError("unflatten_params: expected " + std::to_string(param_count(spec)) +
                      " values, got " + std::to_string(v.size()));
  ActNetParams p;
  p.spec = spec;
  p.w_in = take_matrix(v, spec.m, spec.d_in);
  p.b_in = take_vector(v, spec.m);
  p.layers.reserve(spec.L);
  for (int l = 0; l < spec.L; ++l) {
    ActLayerParams layer;
    layer.beta = take_matrix(v, spec.m, spec.N);
    layer.lambda = take_matrix(v, spec.m, spec.m);
    Vector omega = take_vector(v, spec.N);
    Vector phase = take_vector(v, spec.N);
    layer.basis = SinBasis(std::move(omega), std::move(phase), 1e-4, spec.trainable_basis);
    if (spec.layer_bias) layer.bias = take_vector(v, spec.m);
    p.layers.push_back(std::move(layer));
  }
  p.w_out = take_matrix(v, spec.d_out, spec.m);
  p.b_out = take_vector(v, spec.d_out);
  return p;
}

}  // namespace actnet
