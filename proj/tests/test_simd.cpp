#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "theta_guide/rng.hpp"
#include "theta_guide/simd.hpp"

using namespace theta_guide;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = 2.0 * uniform_unit(rng) - 1.0;
  return v;
}

// Relative agreement that allows for reassociation in the vector kernels.
void check_close(double got, double want, double magnitude) {
  CHECK(std::abs(got - want) <= 1e-13 * (1.0 + magnitude));
}

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(simd::isa_available(simd::Isa::scalar));
  CHECK(simd::available_isas().front() == simd::Isa::scalar);
  CHECK(simd::parse_isa("scalar") == simd::Isa::scalar);
  CHECK_THROWS(simd::parse_isa("sse9"));
}

TEST_CASE("vector kernels match the scalar reference") {
  const auto& ref = simd::kernels_for(simd::Isa::scalar);
  std::mt19937_64 rng(11);
  for (auto isa : simd::available_isas()) {
    CAPTURE(simd::to_string(isa));
    const auto& k = simd::kernels_for(isa);
    CHECK(k.isa == isa);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 67u, 200u}) {
      CAPTURE(n);
      const auto x = random_vector(rng, n);
      const auto y = random_vector(rng, n);
      double mag = 0.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::abs(x[i] * y[i]);
      check_close(k.dot(x.data(), y.data(), n), ref.dot(x.data(), y.data(), n), mag);

      auto y1 = y;
      auto y2 = y;
      k.axpy(0.37, x.data(), y1.data(), n);
      ref.axpy(0.37, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) check_close(y1[i], y2[i], 1.0);

      y1 = y;
      y2 = y;
      k.axpby(-1.5, x.data(), 0.25, y1.data(), n);
      ref.axpby(-1.5, x.data(), 0.25, y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) check_close(y1[i], y2[i], 2.0);

      for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 9u}) {
        const std::size_t stride = n + 3;
        const auto rows = random_vector(rng, count * stride + 1);
        const auto a = random_vector(rng, count);
        y1 = y;
        y2 = y;
        k.gemv_acc(0.5, a.data(), rows.data(), stride, count, y1.data(), n);
        ref.gemv_acc(0.5, a.data(), rows.data(), stride, count, y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) check_close(y1[i], y2[i], static_cast<double>(count));
      }
    }
  }
}

TEST_CASE("active kernel set can be switched") {
  const auto before = simd::active_isa();
  simd::set_active_isa(simd::Isa::scalar);
  CHECK(simd::active_isa() == simd::Isa::scalar);
  CHECK(simd::active().isa == simd::Isa::scalar);
  simd::set_active_isa(before);
  CHECK(simd::active_isa() == before);
}
