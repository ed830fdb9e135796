#include "actnet/kernels/kernels.hpp"

#ifdef ACTNET_BUILD_AVX2

#include <immintrin.h>

// AVX2/FMA variants. Compiled with -mavx2 -mfma in this translation unit
// only; dispatch.cpp guards selection behind a CPUID check.
//
// Accumulation order per output element matches the scalar kernels for the
// broadcast-style loops (gemm_nn_acc, wsum_rows, axpy); the dot-style
// reductions (gemm_nt_acc, rowdot_acc, dot, vsum) split the sum across
// lanes, so they agree with scalar only up to rounding.

namespace actnet::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

void gemm_nn_acc_avx2(int M, int K, int P, const double* A, const double* B, double* C) {
  int m = 0;
  for (; m + 4 <= M; m += 4) {
    const double* a0 = A + static_cast<std::size_t>(m) * K;
    const double* a1 = a0 + K;
    const double* a2 = a1 + K;
    const double* a3 = a2 + K;
    double* c0 = C + static_cast<std::size_t>(m) * P;
    double* c1 = c0 + P;
    double* c2 = c1 + P;
    double* c3 = c2 + P;
    int p = 0;
    for (; p + 8 <= P; p += 8) {
      __m256d r00 = _mm256_loadu_pd(c0 + p), r01 = _mm256_loadu_pd(c0 + p + 4);
      __m256d r10 = _mm256_loadu_pd(c1 + p), r11 = _mm256_loadu_pd(c1 + p + 4);
      __m256d r20 = _mm256_loadu_pd(c2 + p), r21 = _mm256_loadu_pd(c2 + p + 4);
      __m256d r30 = _mm256_loadu_pd(c3 + p), r31 = _mm256_loadu_pd(c3 + p + 4);
      for (int k = 0; k < K; ++k) {
        const double* b = B + static_cast<std::size_t>(k) * P + p;
        const __m256d b0 = _mm256_loadu_pd(b);
        const __m256d b1 = _mm256_loadu_pd(b + 4);
        const __m256d v0 = _mm256_set1_pd(a0[k]);
        const __m256d v1 = _mm256_set1_pd(a1[k]);
        const __m256d v2 = _mm256_set1_pd(a2[k]);
        const __m256d v3 = _mm256_set1_pd(a3[k]);
        r00 = _mm256_fmadd_pd(v0, b0, r00);
        r01 = _mm256_fmadd_pd(v0, b1, r01);
        r10 = _mm256_fmadd_pd(v1, b0, r10);
        r11 = _mm256_fmadd_pd(v1, b1, r11);
        r20 = _mm256_fmadd_pd(v2, b0, r20);
        r21 = _mm256_fmadd_pd(v2, b1, r21);
        r30 = _mm256_fmadd_pd(v3, b0, r30);
        r31 = _mm256_fmadd_pd(v3, b1, r31);
      }
      _mm256_storeu_pd(c0 + p, r00);
      _mm256_storeu_pd(c0 + p + 4, r01);
      _mm256_storeu_pd(c1 + p, r10);
      _mm256_storeu_pd(c1 + p + 4, r11);
      _mm256_storeu_pd(c2 + p, r20);
      _mm256_storeu_pd(c2 + p + 4, r21);
      _mm256_storeu_pd(c3 + p, r30);
      _mm256_storeu_pd(c3 + p + 4, r31);
    }
    for (; p < P; ++p) {
      double s0 = c0[p], s1 = c1[p], s2 = c2[p], s3 = c3[p];
      for (int k = 0; k < K; ++k) {
        const double b = B[static_cast<std::size_t>(k) * P + p];
        s0 += a0[k] * b;
        s1 += a1[k] * b;
        s2 += a2[k] * b;
        s3 += a3[k] * b;
      }
      c0[p] = s0;
      c1[p] = s1;
      c2[p] = s2;
      c3[p] = s3;
    }
  }
  for (; m < M; ++m) {
    const double* a = A + static_cast<std::size_t>(m) * K;
    double* c = C + static_cast<std::size_t>(m) * P;
    for (int k = 0; k < K; ++k) {
      const __m256d v = _mm256_set1_pd(a[k]);
      const double* b = B + static_cast<std::size_t>(k) * P;
      int p = 0;
      for (; p + 4 <= P; p += 4)
        _mm256_storeu_pd(c + p, _mm256_fmadd_pd(v, _mm256_loadu_pd(b + p), _mm256_loadu_pd(c + p)));
      for (; p < P; ++p) c[p] += a[k] * b[p];
    }
  }
}

void gemm_nt_acc_avx2(int M, int N, int P, const double* A, const double* B, double* C) {
  for (int m = 0; m < M; ++m) {
    const double* a = A + static_cast<std::size_t>(m) * P;
    int n = 0;
    for (; n + 4 <= N; n += 4) {
      const double* b0 = B + static_cast<std::size_t>(n) * P;
      const double* b1 = b0 + P;
      const double* b2 = b1 + P;
      const double* b3 = b2 + P;
      __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
      __m256d s2 = _mm256_setzero_pd(), s3 = _mm256_setzero_pd();
      int p = 0;
      for (; p + 4 <= P; p += 4) {
        const __m256d va = _mm256_loadu_pd(a + p);
        s0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(b0 + p), s0);
        s1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(b1 + p), s1);
        s2 = _mm256_fmadd_pd(va, _mm256_loadu_pd(b2 + p), s2);
        s3 = _mm256_fmadd_pd(va, _mm256_loadu_pd(b3 + p), s3);
      }
      double t0 = hsum(s0), t1 = hsum(s1), t2 = hsum(s2), t3 = hsum(s3);
      for (; p < P; ++p) {
        t0 += a[p] * b0[p];
        t1 += a[p] * b1[p];
        t2 += a[p] * b2[p];
        t3 += a[p] * b3[p];
      }
      double* c = C + static_cast<std::size_t>(m) * N + n;
      c[0] += t0;
      c[1] += t1;
      c[2] += t2;
      c[3] += t3;
    }
    for (; n < N; ++n) {
      const double* b = B + static_cast<std::size_t>(n) * P;
      __m256d s = _mm256_setzero_pd();
      int p = 0;
      for (; p + 4 <= P; p += 4) s = _mm256_fmadd_pd(_mm256_loadu_pd(a + p), _mm256_loadu_pd(b + p), s);
      double t = hsum(s);
      for (; p < P; ++p) t += a[p] * b[p];
      C[static_cast<std::size_t>(m) * N + n] += t;
    }
  }
}

void axpy_avx2(int n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  int i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void wsum_rows_avx2(int m, int d, int P, const double* W, const double* A, double* C) {
  for (int k = 0; k < m; ++k) {
    const double* w = W + static_cast<std::size_t>(k) * d;
    const double* ak = A + static_cast<std::size_t>(k) * d * P;
    double* c = C + static_cast<std::size_t>(k) * P;
    int p = 0;
    for (; p + 8 <= P; p += 8) {
      __m256d r0 = _mm256_loadu_pd(c + p);
      __m256d r1 = _mm256_loadu_pd(c + p + 4);
      for (int j = 0; j < d; ++j) {
        const __m256d vw = _mm256_set1_pd(w[j]);
        const double* a = ak + static_cast<std::size_t>(j) * P + p;
        r0 = _mm256_fmadd_pd(vw, _mm256_loadu_pd(a), r0);
        r1 = _mm256_fmadd_pd(vw, _mm256_loadu_pd(a + 4), r1);
      }
      _mm256_storeu_pd(c + p, r0);
      _mm256_storeu_pd(c + p + 4, r1);
    }
    for (; p < P; ++p) {
      double s = c[p];
      for (int j = 0; j < d; ++j) s += w[j] * ak[static_cast<std::size_t>(j) * P + p];
      c[p] = s;
    }
  }
}

void scale_rows_avx2(int m, int d, int P, const double* W, const double* Y, double* A) {
  for (int k = 0; k < m; ++k) {
    const double* y = Y + static_cast<std::size_t>(k) * P;
    for (int j = 0; j < d; ++j) {
      const __m256d vw = _mm256_set1_pd(W[static_cast<std::size_t>(k) * d + j]);
      double* a = A + (static_cast<std::size_t>(k) * d + j) * P;
      int p = 0;
      for (; p + 4 <= P; p += 4) _mm256_storeu_pd(a + p, _mm256_mul_pd(vw, _mm256_loadu_pd(y + p)));
      for (; p < P; ++p) a[p] = W[static_cast<std::size_t>(k) * d + j] * y[p];
    }
  }
}

void rowdot_acc_avx2(int m, int d, int P, const double* A, const double* Y, double* G) {
  for (int k = 0; k < m; ++k) {
    const double* y = Y + static_cast<std::size_t>(k) * P;
    for (int j = 0; j < d; ++j) {
      const double* a = A + (static_cast<std::size_t>(k) * d + j) * P;
      __m256d s = _mm256_setzero_pd();
      int p = 0;
      for (; p + 4 <= P; p += 4) s = _mm256_fmadd_pd(_mm256_loadu_pd(a + p), _mm256_loadu_pd(y + p), s);
      double t = hsum(s);
      for (; p < P; ++p) t += a[p] * y[p];
      G[static_cast<std::size_t>(k) * d + j] += t;
    }
  }
}

double dot_avx2(int n, const double* x, const double* y) {
  __m256d s = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) s = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), s);
  double t = hsum(s);
  for (; i < n; ++i) t += x[i] * y[i];
  return t;
}

double vsum_avx2(int n, const double* x) {
  __m256d s = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) s = _mm256_add_pd(s, _mm256_loadu_pd(x + i));
  double t = hsum(s);
  for (; i < n; ++i) t += x[i];
  return t;
}

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels k = {
      "avx2",          gemm_nn_acc_avx2, gemm_nt_acc_avx2, axpy_avx2,
      wsum_rows_avx2,  scale_rows_avx2,  rowdot_acc_avx2,  dot_avx2,
      vsum_avx2,
  };
  return &k;
}

}  // namespace actnet::kernels

#endif  // ACTNET_BUILD_AVX2
