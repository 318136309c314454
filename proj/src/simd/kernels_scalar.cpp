#include "theta_guide/simd.hpp"

namespace theta_guide::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpby_scalar(double alpha, const double* x, double beta, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i] + beta * y[i];
}

void gemv_acc_scalar(double alpha, const double* a, const double* rows, std::size_t stride, std::size_t count,
                     double* y, std::size_t n) {
  for (std::size_t k = 0; k < count; ++k) {
    const double ak = alpha * a[k];
    if (ak == 0.0) continue;
    const double* row = rows + k * stride;
    for (std::size_t i = 0; i < n; ++i) y[i] += ak * row[i];
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, dot_scalar, axpy_scalar, axpby_scalar, gemv_acc_scalar};
  return table;
}

}  // namespace theta_guide::simd
