#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "actnet/autodiff/jet.hpp"

namespace actnet {

class Tape;

// Lightweight handle to a recorded jet-valued scalar.
struct Var {
  Tape* tape = nullptr;
  std::int32_t idx = -1;
  bool valid() const { return tape != nullptr && idx >= 0; }
};

// Records scalar operations on jet values and replays them in reverse to
// accumulate adjoints. One tape per evaluation; single-owner. Adjoints are
// kept per jet coefficient, so gradients of losses that read any derivative
// slot (PDE residuals) come out exact.
class Tape {
 public:
  enum class Op : std::uint8_t {
    kLeaf, kConst, kLift, kAdd, kSub, kNeg, kMul, kDiv,
    kSin, kCos, kExp, kPowI, kPowR, kScale, kShift, kCoeff,
  };

  Var leaf(const Jet& v);
  Var leaf(double v) { return leaf(Jet::constant(v, 0)); }
  Var constant(const Jet& v);
  Var constant(double v, int order = 0) { return constant(Jet::constant(v, order)); }

  const Jet& value(Var v) const { return nodes_[v.idx].val; }
  int order(Var v) const { return nodes_[v.idx].val.order(); }

  // Reverse pass seeded with d(target value part) = 1. May be called once
  // per tape; records up to `target` participate.
  void backward(Var target);

  // Adjoint jet of a recorded var (valid after backward()).
  std::array<double, kMaxJetOrder + 1> adjoint(Var v) const;
  double adjoint0(Var v) const { return adjoint(v)[0]; }

  std::size_t size() const { return nodes_.size(); }
  void clear();

 private:
  struct Node {
    Op op;
    std::int32_t a = -1;
    std::int32_t b = -1;
    Jet val;
    Jet aux;  // unary backward payload: derivative jet, or scale factor
  };

  Var push(Node n);
  Var lift(Var v, int order);
  std::pair<Var, Var> align(Var x, Var y);

  std::vector<Node> nodes_;
  std::vector<std::array<double, kMaxJetOrder + 1>> adj_;
  bool ran_backward_ = false;

  friend Var operator+(Var, Var);
  friend Var operator-(Var, Var);
  friend Var operator*(Var, Var);
  friend Var operator/(Var, Var);
  friend Var operator-(Var);
  friend Var operator+(Var, double);
  friend Var operator*(Var, double);
  friend Var sin(Var);
  friend Var cos(Var);
  friend Var exp(Var);
  friend Var pow(Var, int);
  friend Var pow(Var, double);
  friend Var coeff(Var, int);
};

Var operator+(Var a, Var b);
Var operator-(Var a, Var b);
Var operator*(Var a, Var b);
Var operator/(Var a, Var b);
Var operator-(Var a);
Var operator+(Var a, double s);
Var operator*(Var a, double s);

inline Var operator+(double s, Var a) { return a + s; }
inline Var operator-(Var a, double s) { return a + (-s); }
inline Var operator-(double s, Var a) { return (-a) + s; }
inline Var operator*(double s, Var a) { return a * s; }
inline Var operator/(Var a, double s) { return a * (1.0 / s); }
inline Var operator/(double s, Var a) { return a.tape->constant(s, a.tape->order(a)) / a; }

Var sin(Var a);
Var cos(Var a);
Var exp(Var a);
Var pow(Var a, int n);
Var pow(Var a, double r);
inline Var sqrt(Var a) { return pow(a, 0.5); }

// Extracts coefficient k as an order-0 var.
Var coeff(Var a, int k);

inline double value_of(Var v) { return v.tape->value(v).value(); }

}  // namespace actnet
