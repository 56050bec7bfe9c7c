// Compiled with -mavx2 -mfma. Only called after a CPUID check.

#include "circulant/kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace circulant::kernels::avx2 {

void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out) {
  const std::size_t n = w.size();
  const std::size_t terms = coeffs.size();
  if (terms == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(w.data() + i);
    const __m256d two_x = _mm256_add_pd(x, x);
    __m256d b1 = _mm256_setzero_pd();
    __m256d b2 = _mm256_setzero_pd();
    for (std::size_t m = terms - 1; m >= 1; --m) {
      const __m256d c = _mm256_set1_pd(coeffs[m]);
      const __m256d b0 = _mm256_fmadd_pd(two_x, b1, _mm256_sub_pd(c, b2));
      b2 = b1;
      b1 = b0;
    }
    const __m256d c0 = _mm256_set1_pd(coeffs[0]);
    _mm256_storeu_pd(out.data() + i, _mm256_fmadd_pd(x, b1, _mm256_sub_pd(c0, b2)));
  }

  if (i < n) scalar::cosine_series(w.subspan(i), coeffs, out.subspan(i));
}

}  // namespace circulant::kernels::avx2
