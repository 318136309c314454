#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "theta_guide/simd.hpp"

namespace theta_guide::simd {

const KernelTable& scalar_kernels();
#if defined(THETA_GUIDE_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif
#if defined(THETA_GUIDE_HAVE_NEON)
const KernelTable& neon_kernels();
#endif

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(THETA_GUIDE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(THETA_GUIDE_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* initial_table() {
  if (const char* forced = std::getenv("THETA_GUIDE_ISA"); forced != nullptr && *forced != '\0') {
    return &kernels_for(parse_isa(forced));
  }
  if (cpu_has(Isa::avx2)) return &kernels_for(Isa::avx2);
  if (cpu_has(Isa::neon)) return &kernels_for(Isa::neon);
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (cpu_has(isa)) out.push_back(isa);
  }
  return out;
}

bool isa_available(Isa isa) { return cpu_has(isa); }

const KernelTable& kernels_for(Isa isa) {
  if (!cpu_has(isa)) throw std::invalid_argument("instruction set '" + to_string(isa) + "' is not available");
  switch (isa) {
#if defined(THETA_GUIDE_HAVE_AVX2)
    case Isa::avx2:
      return avx2_kernels();
#endif
#if defined(THETA_GUIDE_HAVE_NEON)
    case Isa::neon:
      return neon_kernels();
#endif
    default:
      return scalar_kernels();
  }
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

Isa active_isa() { return active().isa; }

void set_active_isa(Isa isa) { current().store(&kernels_for(isa), std::memory_order_relaxed); }

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

Isa parse_isa(const std::string& name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  throw std::invalid_argument("unknown instruction set '" + name + "'");
}

}  // namespace theta_guide::simd
