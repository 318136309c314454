#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

// Data-parallel double-precision kernels behind the dense linear algebra.
// Every kernel has a scalar reference; vector variants (AVX2+FMA on x86-64,
// NEON on AArch64) are picked once at startup from CPUID and can be forced
// with THETA_GUIDE_ISA=scalar|avx2|neon or set_active_isa().

namespace theta_guide::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y[i] = alpha * x[i] + beta * y[i]
  void (*axpby)(double alpha, const double* x, double beta, double* y, std::size_t n);
  // y[i] += alpha * sum_k a[k] * rows[k][i] for k < count; rows are `stride` apart
  void (*gemv_acc)(double alpha, const double* a, const double* rows, std::size_t stride, std::size_t count,
                   double* y, std::size_t n);
};

/// Kernels compiled into this build and runnable on this CPU.
std::vector<Isa> available_isas();
bool isa_available(Isa isa);

/// Throws std::invalid_argument if the ISA is not available.
const KernelTable& kernels_for(Isa isa);
const KernelTable& active();
Isa active_isa();
/// Switches the process-wide kernel table. Throws std::invalid_argument if
/// the ISA is not available. Not meant to be called while solves are running.
void set_active_isa(Isa isa);

std::string to_string(Isa isa);
Isa parse_isa(const std::string& name);

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline void axpby(double alpha, std::span<const double> x, double beta, std::span<double> y) {
  active().axpby(alpha, x.data(), beta, y.data(), x.size());
}

}  // namespace theta_guide::simd
