#pragma once

#include <string>
#include <vector>

namespace actnet::kernels {

// Hot inner loops of batched network evaluation. Every entry has a scalar
// reference implementation and, where the target supports it, a SIMD
// variant (AVX2/FMA on x86-64, NEON on aarch64). Variants are selected
// once at runtime; the ACTNET_KERNEL environment variable (scalar|avx2|neon)
// overrides auto-detection.
//
// Layout conventions: all buffers are dense row-major, sizes in elements.
// The *_acc kernels accumulate into C/G; scale_rows overwrites.
struct Kernels {
  const char* name;

  // C[M,P] += A[M,K] * B[K,P]
  void (*gemm_nn_acc)(int M, int K, int P, const double* A, const double* B, double* C);

  // C[M,N] += A[M,P] * B[N,P]^T   (dot products along P)
  void (*gemm_nt_acc)(int M, int N, int P, const double* A, const double* B, double* C);

  // y[0..n) += a * x[0..n)
  void (*axpy)(int n, double a, const double* x, double* y);

  // Weighted row-block reduction: C[k*P+p] += sum_j W[k*d+j] * A[(k*d+j)*P+p]
  void (*wsum_rows)(int m, int d, int P, const double* W, const double* A, double* C);

  // Row-block broadcast: A[(k*d+j)*P+p] = W[k*d+j] * Y[k*P+p]
  void (*scale_rows)(int m, int d, int P, const double* W, const double* Y, double* A);

  // G[k*d+j] += sum_p A[(k*d+j)*P+p] * Y[k*P+p]
  void (*rowdot_acc)(int m, int d, int P, const double* A, const double* Y, double* G);

  double (*dot)(int n, const double* x, const double* y);
  double (*vsum)(int n, const double* x);

  // s[i] = sin(x[i]), c[i] = cos(x[i]). The scalar variant is libm; SIMD
  // variants use Cody-Waite reduction + minimax polynomials (|err| < ~2 ulp,
  // covered by the equivalence tests).
  void (*sincos_batch)(int n, const double* x, double* s, double* c);
};

const Kernels& scalar_kernels();

// Null when the variant was not compiled in or the CPU lacks the feature.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// Active table (auto-detected once, honoring ACTNET_KERNEL).
const Kernels& active();

// Force a specific variant by name; returns false if unavailable.
bool select(const std::string& name);

std::vector<std::string> available();

}  // namespace actnet::kernels
