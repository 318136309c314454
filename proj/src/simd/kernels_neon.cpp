#include <arm_neon.h>

#include "theta_guide/simd.hpp"

namespace theta_guide::simd {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t a = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), a, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpby_neon(double alpha, const double* x, double beta, double* y, std::size_t n) {
  const float64x2_t a = vdupq_n_f64(alpha);
  const float64x2_t b = vdupq_n_f64(beta);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vmulq_f64(b, vld1q_f64(y + i)), a, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] = alpha * x[i] + beta * y[i];
}

void gemv_acc_neon(double alpha, const double* a, const double* rows, std::size_t stride, std::size_t count,
                   double* y, std::size_t n) {
  for (std::size_t k = 0; k < count; ++k) {
    const double sk = alpha * a[k];
    const float64x2_t ak = vdupq_n_f64(sk);
    const double* r = rows + k * stride;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), ak, vld1q_f64(r + i)));
    for (; i < n; ++i) y[i] += sk * r[i];
  }
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table{Isa::neon, dot_neon, axpy_neon, axpby_neon, gemv_acc_neon};
  return table;
}

}  // namespace theta_guide::simd
