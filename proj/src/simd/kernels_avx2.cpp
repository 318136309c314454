// Compiled with -mavx2 -mfma; only reached after a CPUID check.
#include <immintrin.h>

#include "theta_guide/simd.hpp"

namespace theta_guide::simd {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpby_avx2(double alpha, const double* x, double beta, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  const __m256d b = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d by = _mm256_mul_pd(b, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), by));
  }
  for (; i < n; ++i) y[i] = alpha * x[i] + beta * y[i];
}

void gemv_acc_avx2(double alpha, const double* a, const double* rows, std::size_t stride, std::size_t count,
                   double* y, std::size_t n) {
  // four rows per pass to amortize the loads and stores of y
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const double s0 = alpha * a[k], s1 = alpha * a[k + 1], s2 = alpha * a[k + 2], s3 = alpha * a[k + 3];
    const __m256d a0 = _mm256_set1_pd(s0);
    const __m256d a1 = _mm256_set1_pd(s1);
    const __m256d a2 = _mm256_set1_pd(s2);
    const __m256d a3 = _mm256_set1_pd(s3);
    const double* r0 = rows + k * stride;
    const double* r1 = r0 + stride;
    const double* r2 = r1 + stride;
    const double* r3 = r2 + stride;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(y + i);
      v = _mm256_fmadd_pd(a0, _mm256_loadu_pd(r0 + i), v);
      v = _mm256_fmadd_pd(a1, _mm256_loadu_pd(r1 + i), v);
      v = _mm256_fmadd_pd(a2, _mm256_loadu_pd(r2 + i), v);
      v = _mm256_fmadd_pd(a3, _mm256_loadu_pd(r3 + i), v);
      _mm256_storeu_pd(y + i, v);
    }
    for (; i < n; ++i) y[i] += s0 * r0[i] + s1 * r1[i] + s2 * r2[i] + s3 * r3[i];
  }
  for (; k < count; ++k) {
    const double sk = alpha * a[k];
    const __m256d ak = _mm256_set1_pd(sk);
    const double* r = rows + k * stride;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      _mm256_storeu_pd(y + i, _mm256_fmadd_pd(ak, _mm256_loadu_pd(r + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += sk * r[i];
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{Isa::avx2, dot_avx2, axpy_avx2, axpby_avx2, gemv_acc_avx2};
  return table;
}

}  // namespace theta_guide::simd
