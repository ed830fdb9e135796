#include "actnet/kernels/kernels.hpp"

#if defined(ACTNET_BUILD_NEON) && defined(__ARM_NEON)

#include <arm_neon.h>

// NEON (aarch64) variants, 2-wide float64. Same accumulation-order contract
// as the AVX2 file: broadcast loops match scalar element order, dot-style
// reductions are lane-split.

namespace actnet::kernels {
namespace {

inline double hsum(float64x2_t v) { return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1); }

void gemm_nn_acc_neon(int M, int K, int P, const double* A, const double* B, double* C) {
  for (int m = 0; m < M; ++m) {
    const double* a = A + static_cast<std::size_t>(m) * K;
    double* c = C + static_cast<std::size_t>(m) * P;
    int p = 0;
    for (; p + 4 <= P; p += 4) {
      float64x2_t r0 = vld1q_f64(c + p);
      float64x2_t r1 = vld1q_f64(c + p + 2);
      for (int k = 0; k < K; ++k) {
        const float64x2_t v = vdupq_n_f64(a[k]);
        const double* b = B + static_cast<std::size_t>(k) * P + p;
        r0 = vfmaq_f64(r0, v, vld1q_f64(b));
        r1 = vfmaq_f64(r1, v, vld1q_f64(b + 2));
      }
      vst1q_f64(c + p, r0);
      vst1q_f64(c + p + 2, r1);
    }
    for (; p < P; ++p) {
      double s = c[p];
      for (int k = 0; k < K; ++k) s += a[k] * B[static_cast<std::size_t>(k) * P + p];
      c[p] = s;
    }
  }
}

void gemm_nt_acc_neon(int M, int N, int P, const double* A, const double* B, double* C) {
  for (int m = 0; m < M; ++m) {
    const double* a = A + static_cast<std::size_t>(m) * P;
    for (int n = 0; n < N; ++n) {
      const double* b = B + static_cast<std::size_t>(n) * P;
      float64x2_t s = vdupq_n_f64(0.0);
      int p = 0;
      for (; p + 2 <= P; p += 2) s = vfmaq_f64(s, vld1q_f64(a + p), vld1q_f64(b + p));
      double t = hsum(s);
      for (; p < P; ++p) t += a[p] * b[p];
      C[static_cast<std::size_t>(m) * N + n] += t;
    }
  }
}

void axpy_neon(int n, double a, const double* x, double* y) {
  const float64x2_t va = vdupq_n_f64(a);
  int i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void wsum_rows_neon(int m, int d, int P, const double* W, const double* A, double* C) {
  for (int k = 0; k < m; ++k) {
    const double* w = W + static_cast<std::size_t>(k) * d;
    const double* ak = A + static_cast<std::size_t>(k) * d * P;
    double* c = C + static_cast<std::size_t>(k) * P;
    int p = 0;
    for (; p + 2 <= P; p += 2) {
      float64x2_t r = vld1q_f64(c + p);
      for (int j = 0; j < d; ++j)
        r = vfmaq_f64(r, vdupq_n_f64(w[j]), vld1q_f64(ak + static_cast<std::size_t>(j) * P + p));
      vst1q_f64(c + p, r);
    }
    for (; p < P; ++p) {
      double s = c[p];
      for (int j = 0; j < d; ++j) s += w[j] * ak[static_cast<std::size_t>(j) * P + p];
      c[p] = s;
    }
  }
}

void scale_rows_neon(int m, int d, int P, const double* W, const double* Y, double* A) {
  for (int k = 0; k < m; ++k) {
    const double* y = Y + static_cast<std::size_t>(k) * P;
    for (int j = 0; j < d; ++j) {
      const double w = W[static_cast<std::size_t>(k) * d + j];
      double* a = A + (static_cast<std::size_t>(k) * d + j) * P;
      const float64x2_t vw = vdupq_n_f64(w);
      int p = 0;
      for (; p + 2 <= P; p += 2) vst1q_f64(a + p, vmulq_f64(vw, vld1q_f64(y + p)));
      for (; p < P; ++p) a[p] = w * y[p];
    }
  }
}

void rowdot_acc_neon(int m, int d, int P, const double* A, const double* Y, double* G) {
  for (int k = 0; k < m; ++k) {
    const double* y = Y + static_cast<std::size_t>(k) * P;
    for (int j = 0; j < d; ++j) {
      const double* a = A + (static_cast<std::size_t>(k) * d + j) * P;
      float64x2_t s = vdupq_n_f64(0.0);
      int p = 0;
      for (; p + 2 <= P; p += 2) s = vfmaq_f64(s, vld1q_f64(a + p), vld1q_f64(y + p));
      double t = hsum(s);
      for (; p < P; ++p) t += a[p] * y[p];
      G[static_cast<std::size_t>(k) * d + j] += t;
    }
  }
}

double dot_neon(int n, const double* x, const double* y) {
  float64x2_t s = vdupq_n_f64(0.0);
  int i = 0;
  for (; i + 2 <= n; i += 2) s = vfmaq_f64(s, vld1q_f64(x + i), vld1q_f64(y + i));
  double t = hsum(s);
  for (; i < n; ++i) t += x[i] * y[i];
  return t;
}

double vsum_neon(int n, const double* x) {
  float64x2_t s = vdupq_n_f64(0.0);
  int i = 0;
  for (; i + 2 <= n; i += 2) s = vaddq_f64(s, vld1q_f64(x + i));
  double t = hsum(s);
  for (; i < n; ++i) t += x[i];
  return t;
}

}  // namespace

const Kernels* neon_kernels_impl() {
  static const Kernels k = {
      "neon",          gemm_nn_acc_neon, gemm_nt_acc_neon, axpy_neon,
      wsum_rows_neon,  scale_rows_neon,  rowdot_acc_neon,  dot_neon,
      vsum_neon,
  };
  return &k;
}

}  // namespace actnet::kernels

#endif  // ACTNET_BUILD_NEON && __ARM_NEON
