#include "actnet/model/model.hpp"

#include "actnet/model/generic.hpp"
#include "param_layout.hpp"

namespace actnet {

PassLayout PassLayout::make(std::span<const int> orders) {
  PassLayout out;
  out.slots = 1;
  for (int k : orders) {
    if (k < 1 || k > kMaxJetOrder) throw ArgumentError("PassLayout: pass order must be in [1, 4]");
    out.orders.push_back(k);
    out.offsets.push_back(out.slots);
    out.slots += k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Typed builders shared by the reference paths.

TypedActNet<double> typed_actnet(const ActNetParams& p) {
  TypedActNet<double> t;
  t.spec = p.spec;
  t.w_in = p.w_in.data;
  t.b_in = p.b_in;
  t.w_out = p.w_out.data;
  t.b_out = p.b_out;
  for (const auto& l : p.layers) {
    TypedActLayer<double> tl;
    tl.d = l.d();
    tl.m = l.m();
    tl.N = l.n_basis();
    tl.beta = l.beta.data;
    tl.lambda = l.lambda.data;
    tl.bias = l.bias;
    tl.basis.omega = l.basis.omega;
    tl.basis.phase = l.basis.phase;
    tl.basis.eps = l.basis.eps;
    t.layers.push_back(std::move(tl));
  }
  return t;
}

TypedSiren<double> typed_siren(const SirenParams& p) {
  TypedSiren<double> t;
  t.widths = p.widths;
  t.omega0 = p.omega0;
  for (std::size_t l = 0; l < p.w.size(); ++l) {
    t.w.push_back(p.w[l].data);
    t.b.push_back(p.b[l]);
  }
  return t;
}

namespace {

std::vector<Var> make_leaves(Tape& tape, const double* v, std::size_t n, bool active,
                             TapedParams& out) {
  std::vector<Var> vars;
  vars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Var var = active ? tape.leaf(v[i]) : tape.constant(v[i]);
    vars.push_back(var);
    out.leaves.push_back(var);
    out.active.push_back(active);
  }
  return vars;
}

}  // namespace

TypedActNet<Var> typed_actnet_leaves(Tape& tape, const ActNetParams& p, TapedParams& out) {
  TypedActNet<Var> t;
  t.spec = p.spec;
  t.w_in = make_leaves(tape, p.w_in.data.data(), p.w_in.size(), true, out);
  t.b_in = make_leaves(tape, p.b_in.data(), p.b_in.size(), true, out);
  for (const auto& l : p.layers) {
    TypedActLayer<Var> tl;
    tl.d = l.d();
    tl.m = l.m();
    tl.N = l.n_basis();
    tl.beta = make_leaves(tape, l.beta.data.data(), l.beta.size(), true, out);
    tl.lambda = make_leaves(tape, l.lambda.data.data(), l.lambda.size(), true, out);
    const bool train_basis = l.basis.trainable;
    tl.basis.omega = make_leaves(tape, l.basis.omega.data(), l.basis.omega.size(), train_basis, out);
    tl.basis.phase = make_leaves(tape, l.basis.phase.data(), l.basis.phase.size(), train_basis, out);
    tl.basis.eps = l.basis.eps;
    tl.bias = make_leaves(tape, l.bias.data(), l.bias.size(), true, out);
    t.layers.push_back(std::move(tl));
  }
  t.w_out = make_leaves(tape, p.w_out.data.data(), p.w_out.size(), true, out);
  t.b_out = make_leaves(tape, p.b_out.data(), p.b_out.size(), true, out);
  return t;
}

TypedSiren<Var> typed_siren_leaves(Tape& tape, const SirenParams& p, TapedParams& out) {
  TypedSiren<Var> t;
  t.widths = p.widths;
  t.omega0 = p.omega0;
  for (std::size_t l = 0; l < p.w.size(); ++l) {
    t.w.push_back(make_leaves(tape, p.w[l].data.data(), p.w[l].size(), true, out));
    t.b.push_back(make_leaves(tape, p.b[l].data(), p.b[l].size(), true, out));
  }
  return t;
}

// ---------------------------------------------------------------------------
// ActNetModel: parameter plumbing (engine lives in actnet_engine.cpp).

ActNetModel::ActNetModel(ActNetParams p) : p_(std::move(p)) {
  if (p_.spec.d_out != 1)
    throw CapabilityError("ActNetModel: batched jet engine supports scalar outputs only");
}

std::size_t ActNetModel::n_params() const { return param_count(p_.spec); }

Vector ActNetModel::flatten() const { return flatten_params(p_); }

void ActNetModel::load_flat(std::span<const double> v) {
  p_ = unflatten_params(p_.spec, v);
  prepared_ = false;
}

std::vector<AgcUnit> ActNetModel::agc_units() const {
  const detail::ActNetOffsets off(p_.spec);
  const std::size_t m = p_.spec.m, N = p_.spec.N;
  std::vector<AgcUnit> units;
  for (std::size_t k = 0; k < m; ++k)
    units.push_back({off.w_in + k * p_.spec.d_in, static_cast<std::size_t>(p_.spec.d_in), false});
  units.push_back({off.b_in, m, false});
  for (int l = 0; l < p_.spec.L; ++l) {
    const auto& lo = off.layers[l];
    for (std::size_t k = 0; k < m; ++k) units.push_back({lo.beta + k * N, N, false});
    for (std::size_t k = 0; k < m; ++k) units.push_back({lo.lambda + k * m, m, false});
    units.push_back({lo.omega, N, true});
    units.push_back({lo.phase, N, true});
    if (p_.spec.layer_bias) units.push_back({lo.bias, m, false});
  }
  for (int k = 0; k < p_.spec.d_out; ++k)
    units.push_back({off.w_out + static_cast<std::size_t>(k) * m, m, false});
  units.push_back({off.b_out, static_cast<std::size_t>(p_.spec.d_out), false});
  return units;
}

std::unique_ptr<Model> ActNetModel::clone() const { return std::make_unique<ActNetModel>(p_); }

void ActNetModel::prepare() {
  const int m = p_.spec.m, N = p_.spec.N;
  prep_.resize(p_.layers.size());
  for (std::size_t l = 0; l < p_.layers.size(); ++l) {
    const auto& layer = p_.layers[l];
    auto& pr = prep_[l];
    const int d = layer.d();
    const auto& st = layer.basis.stats();
    pr.mu = st.mu;
    pr.sigma = st.sigma;
    pr.inv = st.inv;
    pr.mu_w.resize(N);
    pr.mu_p.resize(N);
    pr.sig_w.resize(N);
    pr.sig_p.resize(N);
    for (int i = 0; i < N; ++i) {
      const auto g = basis_stat_grads(layer.basis.omega[i], layer.basis.phase[i]);
      pr.mu_w[i] = g.mu_w;
      pr.mu_p[i] = g.mu_p;
      pr.sig_w[i] = g.sigma_w;
      pr.sig_p[i] = g.sigma_p;
    }
    pr.gamma.assign(static_cast<std::size_t>(m) * N * d, 0.0);
    for (int k = 0; k < m; ++k)
      for (int n = 0; n < N; ++n) {
        const double b = layer.beta.at(k, n);
        const double* lam = layer.lambda.row(k);
        double* g = pr.gamma.data() + (static_cast<std::size_t>(k) * N + n) * d;
        for (int j = 0; j < d; ++j) g[j] = b * lam[j];
      }
  }
  prepared_ = true;
}

double ActNetModel::value(const Vector& x) const { return actnet_forward(p_, x)[0]; }

Jet ActNetModel::directional(const Vector& x, int coord, int order) const {
  auto typed = typed_actnet(p_);
  std::vector<Jet> xs;
  xs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    xs.push_back(static_cast<int>(i) == coord ? Jet::variable(x[i], order)
                                              : Jet::constant(x[i], order));
  return actnet_forward_typed(typed, xs)[0];
}

// ---------------------------------------------------------------------------
// SirenModel parameter plumbing (engine in siren_engine.cpp).

SirenModel::SirenModel(SirenParams p) : p_(std::move(p)) {
  if (p_.widths.back() != 1)
    throw CapabilityError("SirenModel: batched jet engine supports scalar outputs only");
}

std::size_t SirenModel::n_params() const { return siren_param_count(p_.widths); }

Vector SirenModel::flatten() const { return siren_flatten(p_); }

void SirenModel::load_flat(std::span<const double> v) {
  p_ = siren_unflatten(p_.widths, p_.omega0, v);
  wt_.clear();
}

std::vector<AgcUnit> SirenModel::agc_units() const {
  const detail::SirenOffsets off(p_.widths);
  std::vector<AgcUnit> units;
  for (std::size_t l = 0; l < off.layers.size(); ++l) {
    const std::size_t fan_in = p_.widths[l], fan_out = p_.widths[l + 1];
    for (std::size_t k = 0; k < fan_out; ++k)
      units.push_back({off.layers[l].w + k * fan_in, fan_in, false});
    units.push_back({off.layers[l].b, fan_out, false});
  }
  return units;
}

std::unique_ptr<Model> SirenModel::clone() const { return std::make_unique<SirenModel>(p_); }

void SirenModel::prepare() {
  wt_.clear();
  wt_.reserve(p_.w.size());
  for (const auto& w : p_.w) {
    Matrix t(w.cols, w.rows);
    for (int i = 0; i < w.rows; ++i)
      for (int j = 0; j < w.cols; ++j) t.at(j, i) = w.at(i, j);
    wt_.push_back(std::move(t));
  }
}

double SirenModel::value(const Vector& x) const { return siren_forward(p_, x)[0]; }

Jet SirenModel::directional(const Vector& x, int coord, int order) const {
  auto typed = typed_siren(p_);
  std::vector<Jet> xs;
  xs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    xs.push_back(static_cast<int>(i) == coord ? Jet::variable(x[i], order)
                                              : Jet::constant(x[i], order));
  return siren_forward_typed(typed, xs)[0];
}

}  // namespace actnet
