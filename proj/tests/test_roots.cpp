#include "circulant/chebyshev.hpp"
#include "circulant/roots.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace circulant {
namespace {

std::vector<std::complex<double>> sorted(const CertifiedRoots& r) {
  std::vector<std::complex<double>> out;
  for (const auto& z : r.expanded()) out.push_back(z.to_complex());
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return out;
}

TEST(FindRoots, Linear) {
  const auto r = find_roots(IntPolynomial{3, 2}, 128);
  ASSERT_EQ(r.count(), 1);
  EXPECT_EQ(r.roots()[0].value.real().to_string(10), BigFloat(-1.5, 128).to_string(10));
  const auto v = find_roots(IntPolynomial{4, -2}, 128);
  EXPECT_NEAR(v.roots()[0].value.real().to_double(), 2.0, 0.0);
}

TEST(FindRoots, Multiplicity) {
  const auto r = find_roots(IntPolynomial{1, -2, 1}, 128);
  ASSERT_EQ(r.roots().size(), 1u);
  EXPECT_EQ(r.roots()[0].multiplicity, 2);
  EXPECT_EQ(r.count(), 2);
  EXPECT_NEAR(r.roots()[0].value.real().to_double(), 1.0, 1e-30);
}

TEST(FindRoots, ConstantRejected) {
  EXPECT_THROW(find_roots(IntPolynomial{5}, 128), std::domain_error);
}

TEST(FindRoots, QuarticGoldenPolynomial) {
  // 1 - 3z + z^2 - 3z^3 + z^4: one real root above 1, its reciprocal, and a unit-circle pair.
  const auto r = find_roots(IntPolynomial{1, -3, 1, -3, 1}, 256);
  ASSERT_EQ(r.count(), 4);
  double largest = 0;
  for (const auto& z : r.expanded()) largest = std::max(largest, std::abs(z.to_complex()));
  EXPECT_NEAR(largest, 2.96557263398866, 1e-12);
}

TEST(FindRoots, ChebyshevRootsAreCosines) {
  const auto r = sorted(find_roots(cheb_t(9), 192));
  ASSERT_EQ(r.size(), 9u);
  for (int k = 0; k < 9; ++k) {
    EXPECT_NEAR(r[static_cast<std::size_t>(k)].real(), -std::cos(M_PI * (k + 0.5) / 9), 1e-14);
  }
}

TEST(FindRoots, RadiiContainTrueRoots) {
  // Roots of (w - 1/2)(w + 3)(w^2 + 1): compare against exact values.
  const IntPolynomial p = IntPolynomial{-1, 2} * IntPolynomial{3, 1} * IntPolynomial{1, 0, 1};
  const auto r = find_roots(p, 128);
  const std::vector<std::complex<double>> truth{{0.5, 0}, {-3, 0}, {0, 1}, {0, -1}};
  for (const auto& root : r.roots()) {
    double best = 1e9;
    for (const auto& t : truth) best = std::min(best, std::abs(root.value.to_complex() - t));
    EXPECT_LT(best, 1e-15);
    EXPECT_LT(root.radius.to_double(), 1e-20);
  }
}

TEST(Property, RootsReproduceCoefficients) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = 2 + static_cast<int>(rng() % 8);
    std::vector<BigInt> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(std::uniform_int_distribution<long>(-9, 9)(rng));
    if (c.back() == 0) c.back() = 1;
    if (c.front() == 0) c.front() = 2;
    const IntPolynomial p(std::move(c));
    const mpfr_prec_t prec = 160;
    const auto r = find_roots(p, prec);
    ASSERT_EQ(r.count(), p.degree());
    // Expand lead * prod (w - z) and compare coefficients.
    std::vector<BigComplex> poly{BigComplex(BigFloat(p.leading(), prec), BigFloat(prec))};
    for (const auto& z : r.expanded()) {
      std::vector<BigComplex> next(poly.size() + 1, BigComplex(prec));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = next[k + 1] + poly[k];
        next[k] = next[k] - poly[k] * z;
      }
      poly = std::move(next);
    }
    for (long k = 0; k <= p.degree(); ++k) {
      const auto got = poly[static_cast<std::size_t>(k)].to_complex();
      EXPECT_NEAR(got.real(), p.coefficient(static_cast<std::size_t>(k)).get_d(), 1e-14);
      EXPECT_NEAR(got.imag(), 0.0, 1e-14);
    }
  }
}

}  // namespace
}  // namespace circulant
