#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and
// SIMD variants; `dispatch` picks the widest one the CPU supports at runtime.

#include <span>
#include <string_view>

namespace circulant::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

/// Best variant available on this machine and build, unless overridden with
/// the CIRC_SIMD environment variable ("scalar", "avx2", "neon").
Isa active_isa() noexcept;

/// True if `isa` was compiled in and the CPU can run it.
bool isa_available(Isa isa) noexcept;

/// out[i] = sum_m coeffs[m] * T_m(w[i]) by Clenshaw's recurrence, where T_m
/// is the Chebyshev polynomial of the first kind. With w[i] = cos(theta_i)
/// this is the cosine series sum_m coeffs[m] cos(m theta_i).
/// Requires out.size() == w.size(); coeffs may be empty (out is zeroed).
void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out);

/// Same contract, forcing a particular variant. Throws std::invalid_argument
/// if that variant is not available.
void cosine_series(Isa isa, std::span<const double> w, std::span<const double> coeffs,
                   std::span<double> out);

namespace scalar {
void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out);
}

#if defined(CIRCULANT_HAVE_AVX2)
namespace avx2 {
void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out);
}
#endif

#if defined(CIRCULANT_HAVE_NEON)
namespace neon {
void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out);
}
#endif

}  // namespace circulant::kernels
