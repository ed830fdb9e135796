#include "actnet/autodiff/tape.hpp"

namespace actnet {

namespace {

// y[j] += sum_{k>=j} C(k,j) v[k-j] * d[k]  -- transpose of jet-multiplication
// by the fixed jet v, i.e. the adjoint of w = v (*) u.
void conv_transpose_acc(const Jet& v, const std::array<double, kMaxJetOrder + 1>& d, int order,
                        std::array<double, kMaxJetOrder + 1>& y) {
  for (int j = 0; j <= order; ++j) {
    double s = 0.0;
    for (int k = j; k <= order; ++k) s += kBinom[k][j] * v[k - j] * d[k];
    y[j] += s;
  }
}

Jet reciprocal(const Jet& b) { return Jet::constant(1.0, b.order()) / b; }

}  // namespace

Var Tape::push(Node n) {
  nodes_.push_back(std::move(n));
  return Var{this, static_cast<std::int32_t>(nodes_.size() - 1)};
}

Var Tape::leaf(const Jet& v) { return push(Node{Op::kLeaf, -1, -1, v, Jet{}}); }

Var Tape::constant(const Jet& v) { return push(Node{Op::kConst, -1, -1, v, Jet{}}); }

Var Tape::lift(Var v, int order) {
  Jet lifted = Jet::constant(nodes_[v.idx].val.value(), order);
  return push(Node{Op::kLift, v.idx, -1, lifted, Jet{}});
}

std::pair<Var, Var> Tape::align(Var x, Var y) {
  const int ox = order(x), oy = order(y);
  if (ox == oy) return {x, y};
  if (ox == 0) return {lift(x, oy), y};
  if (oy == 0) return {x, lift(y, ox)};
  throw DimensionError("tape: jet order mismatch " + std::to_string(ox) + " vs " +
                       std::to_string(oy));
}

void Tape::clear() {
  nodes_.clear();
  adj_.clear();
  ran_backward_ = false;
}

std::array<double, kMaxJetOrder + 1> Tape::adjoint(Var v) const {
  return adj_.at(static_cast<std::size_t>(v.idx));
}

void Tape::backward(Var target) {
  adj_.assign(nodes_.size(), {});
  ran_backward_ = true;
  adj_[target.idx][0] = 1.0;
  for (std::int32_t i = target.idx; i >= 0; --i) {
    const Node& n = nodes_[i];
    const auto& d = adj_[i];
    const int K = n.val.order();
    bool live = false;
    for (int k = 0; k <= K; ++k) live = live || d[k] != 0.0;
    if (!live) continue;
    switch (n.op) {
      case Op::kLeaf:
      case Op::kConst:
        break;
      case Op::kLift:
        adj_[n.a][0] += d[0];
        break;
      case Op::kAdd:
        for (int k = 0; k <= K; ++k) {
          adj_[n.a][k] += d[k];
          adj_[n.b][k] += d[k];
        }
        break;
      case Op::kSub:
        for (int k = 0; k <= K; ++k) {
          adj_[n.a][k] += d[k];
          adj_[n.b][k] -= d[k];
        }
        break;
      case Op::kNeg:
        for (int k = 0; k <= K; ++k) adj_[n.a][k] -= d[k];
        break;
      case Op::kMul:
        conv_transpose_acc(nodes_[n.b].val, d, K, adj_[n.a]);
        conv_transpose_acc(nodes_[n.a].val, d, K, adj_[n.b]);
        break;
      case Op::kDiv: {
        const Jet ib = reciprocal(nodes_[n.b].val);
        conv_transpose_acc(ib, d, K, adj_[n.a]);
        const Jet q = n.val * ib;  // a / b^2
        std::array<double, kMaxJetOrder + 1> tmp{};
        conv_transpose_acc(q, d, K, tmp);
        for (int k = 0; k <= K; ++k) adj_[n.b][k] -= tmp[k];
        break;
      }
      case Op::kSin:
      case Op::kCos:
      case Op::kExp:
      case Op::kPowI:
      case Op::kPowR:
        conv_transpose_acc(n.aux, d, K, adj_[n.a]);
        break;
      case Op::kScale:
        for (int k = 0; k <= K; ++k) adj_[n.a][k] += n.aux.value() * d[k];
        break;
      case Op::kShift:
        for (int k = 0; k <= K; ++k) adj_[n.a][k] += d[k];
        break;
      case Op::kCoeff:
        adj_[n.a][n.b] += d[0];
        break;
    }
  }
}

Var operator+(Var a, Var b) {
  auto [x, y] = a.tape->align(a, b);
  return a.tape->push({Tape::Op::kAdd, x.idx, y.idx, a.tape->value(x) + a.tape->value(y), Jet{}});
}

Var operator-(Var a, Var b) {
  auto [x, y] = a.tape->align(a, b);
  return a.tape->push({Tape::Op::kSub, x.idx, y.idx, a.tape->value(x) - a.tape->value(y), Jet{}});
}

Var operator*(Var a, Var b) {
  auto [x, y] = a.tape->align(a, b);
  return a.tape->push({Tape::Op::kMul, x.idx, y.idx, a.tape->value(x) * a.tape->value(y), Jet{}});
}

Var operator/(Var a, Var b) {
  auto [x, y] = a.tape->align(a, b);
  return a.tape->push({Tape::Op::kDiv, x.idx, y.idx, a.tape->value(x) / a.tape->value(y), Jet{}});
}

Var operator-(Var a) {
  return a.tape->push({Tape::Op::kNeg, a.idx, -1, -a.tape->value(a), Jet{}});
}

Var operator+(Var a, double s) {
  return a.tape->push({Tape::Op::kShift, a.idx, -1, a.tape->value(a) + s, Jet{}});
}

Var operator*(Var a, double s) {
  return a.tape->push(
      {Tape::Op::kScale, a.idx, -1, a.tape->value(a) * s, Jet::constant(s, 0)});
}

Var sin(Var a) {
  Jet s, c;
  sin_cos(a.tape->value(a), s, c);
  return a.tape->push({Tape::Op::kSin, a.idx, -1, s, c});
}

Var cos(Var a) {
  Jet s, c;
  sin_cos(a.tape->value(a), s, c);
  return a.tape->push({Tape::Op::kCos, a.idx, -1, c, -s});
}

Var exp(Var a) {
  Jet e = exp(a.tape->value(a));
  return a.tape->push({Tape::Op::kExp, a.idx, -1, e, e});
}

Var pow(Var a, int n) {
  const Jet& u = a.tape->value(a);
  Jet val = pow(u, n);
  Jet deriv = n == 0 ? Jet::constant(0.0, u.order()) : pow(u, n - 1) * static_cast<double>(n);
  return a.tape->push({Tape::Op::kPowI, a.idx, -1, val, deriv});
}

Var pow(Var a, double r) {
  const Jet& u = a.tape->value(a);
  Jet val = pow(u, r);
  Jet deriv = pow(u, r - 1.0) * r;
  return a.tape->push({Tape::Op::kPowR, a.idx, -1, val, deriv});
}

Var coeff(Var a, int k) {
  if (k > a.tape->order(a)) throw ArgumentError("coeff: index exceeds jet order");
  return a.tape->push(
      {Tape::Op::kCoeff, a.idx, k, Jet::constant(a.tape->value(a)[k], 0), Jet{}});
}

}  // namespace actnet
