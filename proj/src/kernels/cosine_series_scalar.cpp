#include "circulant/kernels.hpp"

#include <cstddef>

namespace circulant::kernels::scalar {

void cosine_series(std::span<const double> w, std::span<const double> coeffs, std::span<double> out) {
  const std::size_t terms = coeffs.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (terms == 0) {
      out[i] = 0.0;
      continue;
    }
    const double x = w[i];
    const double two_x = 2.0 * x;
    // b_k = c_k + 2x b_{k+1} - b_{k+2}, run down to k = 1.
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t m = terms - 1; m >= 1; --m) {
      const double b0 = coeffs[m] + two_x * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    out[i] = coeffs[0] + x * b1 - b2;
  }
}

}  // namespace circulant::kernels::scalar
