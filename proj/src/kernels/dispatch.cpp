#include "circulant/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace circulant::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(CIRCULANT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* forced = std::getenv("CIRC_SIMD")) {
    const std::string name(forced);
    if (name == "scalar") return Isa::kScalar;
    if (name == "avx2" && isa_available(Isa::kAvx2)) return Isa::kAvx2;
    if (name == "neon" && isa_available(Isa::kNeon)) return Isa::kNeon;
  }
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

void check_sizes(std::span<const double> w, std::span<double> out) {
  if (w.size() != out.size()) throw std::invalid_argument("cosine_series: output size mismatch");
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: return cpu_has_avx2();
    case Isa::kNeon:
#if defined(CIRCULANT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

void cosine_series(Isa isa, std::span<const double> w, std::span<const double> coeffs,
                   std::span<double> out) {
  check_sizes(w, out);
  switch (isa) {
    case Isa::kScalar:
      scalar::cosine_series(w, coeffs, out);
      return;
    case Isa::kAvx2:
#if defined(CIRCULANT_HAVE_AVX2)
      if (cpu_has_avx2()) {
        avx2::cosine_series(w, coeffs, out);
        return;
      }
#endif
      break;
    case Isa::kNeon:
#if defined(CIRCULANT_HAVE_NEON)
      neon::cosine_series(w, coeffs, out);
      return;
#else
      break;
#endif
  }
  throw std::invalid_argument("cosine_series: " + std::string(isa_name(isa)) + " is not available");
}

void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out) {
  cosine_series(active_isa(), w, coeffs, out);
}

}  // namespace circulant::kernels
