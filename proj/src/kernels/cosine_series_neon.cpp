// AArch64 only; NEON is baseline there so no runtime check is needed.

#include "circulant/kernels.hpp"

#include <arm_neon.h>

#include <cstddef>

namespace circulant::kernels::neon {

void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out) {
  const std::size_t n = w.size();
  const std::size_t terms = coeffs.size();
  if (terms == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(w.data() + i);
    const float64x2_t two_x = vaddq_f64(x, x);
    float64x2_t b1 = vdupq_n_f64(0.0);
    float64x2_t b2 = vdupq_n_f64(0.0);
    for (std::size_t m = terms - 1; m >= 1; --m) {
      const float64x2_t c = vdupq_n_f64(coeffs[m]);
      const float64x2_t b0 = vfmaq_f64(vsubq_f64(c, b2), two_x, b1);
      b2 = b1;
      b1 = b0;
    }
    const float64x2_t c0 = vdupq_n_f64(coeffs[0]);
    vst1q_f64(out.data() + i, vfmaq_f64(vsubq_f64(c0, b2), x, b1));
  }

  if (i < n) scalar::cosine_series(w.subspan(i), coeffs, out.subspan(i));
}

}  // namespace circulant::kernels::neon
