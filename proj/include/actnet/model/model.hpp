#pragma once

#include <memory>
#include <span>
#include <string>

#include "actnet/autodiff/jet.hpp"
#include "actnet/model/actnet.hpp"
#include "actnet/model/siren.hpp"

namespace actnet {

// Derivative-pass layout for batched jet evaluation. Slot 0 carries the
// value; each pass c of order K_c owns K_c consecutive derivative slots.
// All passes share slot 0, so a quantity occupies 1 + sum(K_c) slots.
struct PassLayout {
  std::vector<int> orders;
  std::vector<int> offsets;  // slot of the first derivative of each pass
  int slots = 1;

  static PassLayout make(std::span<const int> orders);
  static PassLayout value_only() { return make({}); }
  int n_passes() const { return static_cast<int>(orders.size()); }
};

// Contiguous unit of the flat parameter vector for adaptive gradient
// clipping: one matrix row or one whole vector. `basis` marks frequency /
// phase blocks, which get their own clipping threshold.
struct AgcUnit {
  std::size_t offset = 0;
  std::size_t len = 0;
  bool basis = false;
};

// Per-chunk scratch for the batched jet engines (layer activations, basis
// jets, cosine jets). One per worker; reused across chunks.
class JetWorkspace {
 public:
  virtual ~JetWorkspace() = default;
};

// Per-chunk gradient accumulator. finalize() folds internal buffers into a
// flat gradient (flatten_params layout) added onto `out`; accumulators are
// reduced in chunk order so results do not depend on the worker count.
class GradSink {
 public:
  virtual ~GradSink() = default;
  virtual void reset() = 0;
  virtual void finalize(Vector& out) = 0;
};

// Type-erased scalar-output network family usable by the PDE residual
// evaluator and the trainer. Batched jet entry points take network-input
// jets laid out [slot][input][point] and produce output jets [slot][point].
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string family() const = 0;
  virtual int d_in() const = 0;
  virtual std::size_t n_params() const = 0;
  virtual Vector flatten() const = 0;
  virtual void load_flat(std::span<const double> v) = 0;
  virtual std::vector<AgcUnit> agc_units() const = 0;
  virtual std::unique_ptr<Model> clone() const = 0;

  // Refresh derived state (fused layer tensors, basis normalization) from
  // the current parameters. Call once per evaluation batch.
  virtual void prepare() = 0;

  virtual std::unique_ptr<JetWorkspace> make_workspace(const PassLayout& layout,
                                                       int chunk) const = 0;
  virtual std::unique_ptr<GradSink> make_grad_sink() const = 0;

  virtual void jet_forward(const PassLayout& layout, const double* in, int P, JetWorkspace& ws,
                           double* out) const = 0;
  virtual void jet_backward(const PassLayout& layout, const double* dout, int P, JetWorkspace& ws,
                            GradSink& sink) const = 0;

  // Single-point reference paths (scalar-type-generic forward).
  virtual double value(const Vector& net_inputs) const = 0;
  virtual Jet directional(const Vector& net_inputs, int coord, int order) const = 0;
};

class ActNetModel final : public Model {
 public:
  explicit ActNetModel(ActNetParams p);
  const ActNetParams& params() const { return p_; }

  std::string family() const override { return "actnet"; }
  int d_in() const override { return p_.spec.d_in; }
  std::size_t n_params() const override;
  Vector flatten() const override;
  void load_flat(std::span<const double> v) override;
  std::vector<AgcUnit> agc_units() const override;
  std::unique_ptr<Model> clone() const override;
  void prepare() override;
  std::unique_ptr<JetWorkspace> make_workspace(const PassLayout&, int chunk) const override;
  std::unique_ptr<GradSink> make_grad_sink() const override;
  void jet_forward(const PassLayout&, const double* in, int P, JetWorkspace&,
                   double* out) const override;
  void jet_backward(const PassLayout&, const double* dout, int P, JetWorkspace&,
                    GradSink&) const override;
  double value(const Vector& x) const override;
  Jet directional(const Vector& x, int coord, int order) const override;

 private:
  struct PreparedLayer {
    Vector gamma;  // m x (N*d): gamma[k][n*d+j] = beta(k,n) * lambda(k,j)
    Vector mu, inv, sigma;
    Vector mu_w, mu_p, sig_w, sig_p;  // stat partials for trainable bases
  };
  ActNetParams p_;
  std::vector<PreparedLayer> prep_;
  bool prepared_ = false;

  friend class ActNetGradSink;
  friend class ActNetWorkspace;
};

class SirenModel final : public Model {
 public:
  explicit SirenModel(SirenParams p);
  const SirenParams& params() const { return p_; }

  std::string family() const override { return "siren"; }
  int d_in() const override { return p_.widths.front(); }
  std::size_t n_params() const override;
  Vector flatten() const override;
  void load_flat(std::span<const double> v) override;
  std::vector<AgcUnit> agc_units() const override;
  std::unique_ptr<Model> clone() const override;
  void prepare() override;
  std::unique_ptr<JetWorkspace> make_workspace(const PassLayout&, int chunk) const override;
  std::unique_ptr<GradSink> make_grad_sink() const override;
  void jet_forward(const PassLayout&, const double* in, int P, JetWorkspace&,
                   double* out) const override;
  void jet_backward(const PassLayout&, const double* dout, int P, JetWorkspace&,
                    GradSink&) const override;
  double value(const Vector& x) const override;
  Jet directional(const Vector& x, int coord, int order) const override;

 private:
  SirenParams p_;
  std::vector<Matrix> wt_;  // transposed weights, refreshed by prepare()

  friend class SirenGradSink;
  friend class SirenWorkspace;
};

}  // namespace actnet
