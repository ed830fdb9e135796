#include "actnet/kernels/kernels.hpp"

#include <cmath>

// Reference kernels. Plain loops, no FMA contraction: these define the
// semantics the SIMD variants are checked against.

namespace actnet::kernels {
namespace {

void gemm_nn_acc_scalar(int M, int K, int P, const double* A, const double* B, double* C) {
  for (int m = 0; m < M; ++m) {
    double* c = C + static_cast<std::size_t>(m) * P;
    const double* a = A + static_cast<std::size_t>(m) * K;
    for (int k = 0; k < K; ++k) {
      const double amk = a[k];
      const double* b = B + static_cast<std::size_t>(k) * P;
      for (int p = 0; p < P; ++p) c[p] += amk * b[p];
    }
  }
}

void gemm_nt_acc_scalar(int M, int N, int P, const double* A, const double* B, double* C) {
  for (int m = 0; m < M; ++m) {
    const double* a = A + static_cast<std::size_t>(m) * P;
    for (int n = 0; n < N; ++n) {
      const double* b = B + static_cast<std::size_t>(n) * P;
      double s = 0.0;
      for (int p = 0; p < P; ++p) s += a[p] * b[p];
      C[static_cast<std::size_t>(m) * N + n] += s;
    }
  }
}

void axpy_scalar(int n, double a, const double* x, double* y) {
  for (int i = 0; i < n; ++i) y[i] += a * x[i];
}

void wsum_rows_scalar(int m, int d, int P, const double* W, const double* A, double* C) {
  for (int k = 0; k < m; ++k) {
    double* c = C + static_cast<std::size_t>(k) * P;
    for (int j = 0; j < d; ++j) {
      const double w = W[static_cast<std::size_t>(k) * d + j];
      const double* a = A + (static_cast<std::size_t>(k) * d + j) * P;
      for (int p = 0; p < P; ++p) c[p] += w * a[p];
    }
  }
}

void scale_rows_scalar(int m, int d, int P, const double* W, const double* Y, double* A) {
  for (int k = 0; k < m; ++k) {
    const double* y = Y + static_cast<std::size_t>(k) * P;
    for (int j = 0; j < d; ++j) {
      const double w = W[static_cast<std::size_t>(k) * d + j];
      double* a = A + (static_cast<std::size_t>(k) * d + j) * P;
      for (int p = 0; p < P; ++p) a[p] = w * y[p];
    }
  }
}

void rowdot_acc_scalar(int m, int d, int P, const double* A, const double* Y, double* G) {
  for (int k = 0; k < m; ++k) {
    const double* y = Y + static_cast<std::size_t>(k) * P;
    for (int j = 0; j < d; ++j) {
      const double* a = A + (static_cast<std::size_t>(k) * d + j) * P;
      double s = 0.0;
      for (int p = 0; p < P; ++p) s += a[p] * y[p];
      G[static_cast<std::size_t>(k) * d + j] += s;
    }
  }
}

double dot_scalar(int n, const double* x, const double* y) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double vsum_scalar(int n, const double* x) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i];
  return s;
}

void sincos_batch_scalar(int n, const double* x, double* s, double* c) {
  for (int i = 0; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {
      "scalar",          gemm_nn_acc_scalar, gemm_nt_acc_scalar, axpy_scalar,
      wsum_rows_scalar,  scale_rows_scalar,  rowdot_acc_scalar,  dot_scalar,
      vsum_scalar,       sincos_batch_scalar,
  };
  return k;
}

}  // namespace actnet::kernels
