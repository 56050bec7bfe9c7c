#include "circulant/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace circulant::kernels {
namespace {

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

// Direct sum of c_m cos(m theta) in long double, independent of Clenshaw.
double reference(double w, const std::vector<double>& coeffs) {
  const long double theta = std::acos(static_cast<long double>(w));
  long double sum = 0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) sum += coeffs[m] * std::cos(static_cast<long double>(m) * theta);
  return static_cast<double>(sum);
}

TEST(Kernels, ScalarAlwaysAvailable) {
  EXPECT_TRUE(isa_available(Isa::kScalar));
  EXPECT_EQ(isa_name(Isa::kScalar), "scalar");
  EXPECT_TRUE(isa_available(active_isa()));
}

TEST(Kernels, ScalarMatchesDirectSum) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> coeffs(1 + rng() % 12);
    for (auto& c : coeffs) c = std::round(unit(rng) * 8);
    std::vector<double> w(37);
    for (auto& x : w) x = unit(rng);
    std::vector<double> out(w.size());
    scalar::cosine_series(w, coeffs, out);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(out[i], reference(w[i], coeffs), 1e-12);
  }
}

TEST(Kernels, EmptyCoefficientsGiveZeros) {
  std::vector<double> w{0.1, 0.2, 0.3};
  std::vector<double> out(3, 7.0);
  for (Isa isa : available()) {
    cosine_series(isa, w, {}, out);
    for (double v : out) EXPECT_EQ(v, 0.0);
  }
}

TEST(Kernels, SizeMismatchThrows) {
  std::vector<double> w(4, 0.0);
  std::vector<double> out(3);
  std::vector<double> c{1.0};
  EXPECT_THROW(cosine_series(w, c, out), std::invalid_argument);
}

TEST(Kernels, UnavailableIsaThrows) {
  std::vector<double> w(2, 0.0);
  std::vector<double> out(2);
  std::vector<double> c{1.0};
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (!isa_available(isa)) EXPECT_THROW(cosine_series(isa, w, c, out), std::invalid_argument);
  }
}

// Every compiled-in variant agrees with the scalar reference on all lengths,
// including the tails the vector loops hand to scalar code.
TEST(Kernels, SimdEquivalence) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t len = 0; len <= 67; ++len) {
    std::vector<double> w(len);
    for (auto& x : w) x = unit(rng);
    std::vector<double> coeffs(1 + rng() % 40);
    for (auto& c : coeffs) c = unit(rng) * 50;
    std::vector<double> expected(len);
    scalar::cosine_series(w, coeffs, expected);
    for (Isa isa : available()) {
      std::vector<double> got(len);
      cosine_series(isa, w, coeffs, got);
      double scale = 0;
      for (double c : coeffs) scale += std::abs(c);
      for (std::size_t i = 0; i < len; ++i) {
        EXPECT_NEAR(got[i], expected[i], 1e-13 * scale) << isa_name(isa) << " len=" << len << " i=" << i;
      }
    }
  }
}

TEST(Kernels, DispatchUsesActiveVariant) {
  std::vector<double> w{0.5, -0.25, 1.0, -1.0, 0.0};
  std::vector<double> c{4, -2, -2};
  std::vector<double> a(w.size());
  std::vector<double> b(w.size());
  cosine_series(w, c, a);
  cosine_series(active_isa(), w, c, b);
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace circulant::kernels
