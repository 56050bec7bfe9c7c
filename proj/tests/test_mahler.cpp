#include "circulant/errors.hpp"
#include "circulant/mahler.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace circulant {
namespace {

using Steps = std::vector<long>;

double measure(const Steps& steps, Family family = Family::kEven) {
  return mahler_root_product(associated_laurent(steps, family)).value;
}

TEST(AssociatedLaurent, CycleIsDoubleRootOnly) {
  const LaurentSpectrum l = associated_laurent(Steps{1}, Family::kEven);
  EXPECT_EQ(l.ordinary(), (IntPolynomial{-1, 2, -1}));
  EXPECT_EQ(l.off_circle_factor().degree(), 0);
  EXPECT_EQ(l.roots().count(), 0);
  EXPECT_DOUBLE_EQ(mahler_root_product(l).value, 1.0);
  EXPECT_DOUBLE_EQ(mahler_quadrature(l).value, 1.0);
}

TEST(AssociatedLaurent, Structure) {
  const LaurentSpectrum l = associated_laurent(Steps{1, 2}, Family::kEven);
  EXPECT_EQ(l.laurent().at(0), 4);
  EXPECT_EQ(l.laurent().at(2), -1);
  EXPECT_EQ(l.laurent().at(-1), -1);
  EXPECT_EQ(l.ordinary().degree(), 4);
  // Palindromic up to sign, off-circle roots paired as z, 1/z.
  const auto& c = l.ordinary().coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(c[k], c[c.size() - 1 - k]);
  EXPECT_EQ(l.roots().count(), 2 * (2 - 1));
  ASSERT_EQ(l.outside_roots().size(), 1u);
  EXPECT_NEAR(abs(l.outside_roots()[0].value).to_double(), (3 + std::sqrt(5.0)) / 2, 1e-15);
}

TEST(AssociatedLaurent, RejectsUnsortedSteps) {
  EXPECT_THROW(associated_laurent(Steps{2, 1}, Family::kEven), std::invalid_argument);
  EXPECT_THROW(associated_laurent(Steps{}, Family::kEven), std::invalid_argument);
  EXPECT_THROW(associated_laurent(Steps{0, 1}, Family::kEven), std::invalid_argument);
}

TEST(AssociatedLaurent, ReducesByGcd) {
  const LaurentSpectrum l = associated_laurent(Steps{3, 6}, Family::kEven);
  EXPECT_EQ(l.step_gcd(), 3);
  EXPECT_EQ(l.reduced_steps(), (Steps{1, 2}));
  EXPECT_EQ(l.steps(), (Steps{3, 6}));
}

TEST(Property, RootPairingAndCount) {
  for (const auto& steps : {Steps{1, 3}, Steps{2, 3}, Steps{1, 2, 3}, Steps{1, 4, 5}, Steps{2, 5}}) {
    const LaurentSpectrum l = associated_laurent(steps, Family::kEven);
    EXPECT_EQ(l.roots().count(), 2 * (steps.back() - 1));
    const auto all = l.roots().expanded();
    for (const auto& z : all) {
      const std::complex<double> inv = 1.0 / z.to_complex();
      double best = 1e9;
      for (const auto& y : all) best = std::min(best, std::abs(y.to_complex() - inv));
      EXPECT_LT(best, 1e-12);
      EXPECT_GT(std::abs(std::abs(z.to_complex()) - 1.0), 1e-6);
    }
  }
}

TEST(MahlerRootProduct, GoldenValues) {
  EXPECT_NEAR(measure({1, 2}), (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(measure({1, 3}), 2.89, 5e-3);
  EXPECT_NEAR(measure({1, 2, 3}), 0.5 * (2 + std::sqrt(7.0) + std::sqrt(7 + 4 * std::sqrt(7.0))), 1e-12);
  EXPECT_NEAR(measure({1, 2}, Family::kDiagonal),
              0.25 * (3 + std::sqrt(5.0)) * (4 + std::sqrt(3.0) + std::sqrt(15 + 8 * std::sqrt(3.0))), 1e-11);
  EXPECT_NEAR(measure({1}, Family::kDiagonal), 2 + std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(measure({1, 2, 3}, Family::kDiagonal), 32.7865, 1e-4);
}

TEST(MahlerRootProduct, OneThreeClosedFormPrincipalBranch) {
  const std::complex<double> a = std::sqrt(std::complex<double>(1, -2));
  const std::complex<double> b = std::sqrt(std::complex<double>(1, 2));
  const double closed = std::abs(0.5 * (1.0 + a) * (1.0 + b));
  EXPECT_NEAR(measure({1, 3}), closed, 1e-12);
}

TEST(MahlerRootProduct, ErrorBoundCoversExpOfLog) {
  const MahlerEstimate m = mahler_root_product(associated_laurent(Steps{2, 3}, Family::kEven));
  EXPECT_LE(std::abs(m.value - std::exp(m.small_measure)), m.error_bound + 1e-15);
  EXPECT_GT(m.error_bound, 0.0);
  EXPECT_EQ(m.method, MahlerMethod::kRootProduct);
  EXPECT_EQ(method_name(m.method), "root-product");
}

TEST(MahlerQuadrature, AgreesWithRootProduct) {
  for (const auto& [steps, family] : {std::pair{Steps{1, 2}, Family::kEven}, std::pair{Steps{1, 3}, Family::kEven},
                                      std::pair{Steps{2, 3}, Family::kEven}, std::pair{Steps{1, 2, 3}, Family::kEven},
                                      std::pair{Steps{1, 2}, Family::kDiagonal}, std::pair{Steps{1, 2, 3}, Family::kDiagonal},
                                      std::pair{Steps{1, 5, 7}, Family::kEven}}) {
    const LaurentSpectrum l = associated_laurent(steps, family);
    const MahlerEstimate a = mahler_root_product(l);
    const MahlerEstimate b = mahler_quadrature(l);
    EXPECT_NEAR(a.value, b.value, 1e-8);
    EXPECT_LE(std::abs(a.value - b.value), a.error_bound + b.error_bound + 1e-12);
    EXPECT_EQ(b.method, MahlerMethod::kQuadrature);
  }
}

TEST(MahlerQuadrature, FailsWhenToleranceUnreachable) {
  QuadratureOptions opts;
  opts.order = 2;
  opts.initial_panels = 1;
  opts.max_panels = 2;
  opts.tolerance = 1e-15;
  opts.target = 0.0;
  EXPECT_THROW(mahler_quadrature(associated_laurent(Steps{1, 2, 3}, Family::kEven), opts), ConvergenceError);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(8, x, w);
  double total = 0;
  for (double wi : w) total += wi;
  EXPECT_NEAR(total, 2.0, 1e-14);
  for (int degree = 0; degree <= 15; ++degree) {
    double sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], degree);
    EXPECT_NEAR(sum, degree % 2 ? 0.0 : 2.0 / (degree + 1), 1e-14) << degree;
  }
}

TEST(Property, ScalingInvariance) {
  for (const auto& steps : {Steps{1, 2}, Steps{1, 3}, Steps{2, 3}, Steps{1, 2, 3}}) {
    for (const long d : {2L, 3L}) {
      Steps scaled;
      for (const long s : steps) scaled.push_back(d * s);
      EXPECT_NEAR(measure(scaled), measure(steps), 1e-12);
      EXPECT_NEAR(measure(scaled, Family::kDiagonal), measure(steps, Family::kDiagonal), 1e-11);
    }
  }
}

TEST(Property, Multiplicativity) {
  // M(L (L + 2)) = M(L) M(L + 2); L + 2 has no root at 1, so integrate log|L + 2| directly.
  for (const auto& steps : {Steps{1}, Steps{1, 2}, Steps{1, 3}, Steps{1, 2, 3}}) {
    const double product = measure(steps, Family::kDiagonal);
    const double l = measure(steps, Family::kEven);
    std::vector<double> x;
    std::vector<double> w;
    gauss_legendre(40, x, w);
    double m_plus = 0;
    const int panels = 64;
    for (int p = 0; p < panels; ++p) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = (p + 0.5 * (x[i] + 1)) / panels;
        double value = 2.0 * static_cast<double>(steps.size()) + 2.0;
        for (const long s : steps) value -= 2.0 * std::cos(2 * M_PI * s * t);
        m_plus += 0.5 * w[i] / panels * std::log(std::abs(value));
      }
    }
    EXPECT_NEAR(product, l * std::exp(m_plus), 1e-9 * product);
  }
}

TEST(AsymptoticRatio, FibonacciFamily) {
  EXPECT_NEAR(asymptotic_ratio(Steps{1, 2}, Family::kEven, 30).ratio, 1.0, 1e-6);
}

TEST(AsymptoticRatio, Cycle) {
  for (long n : {3L, 10L, 57L}) EXPECT_NEAR(asymptotic_ratio(Steps{1}, Family::kEven, n).ratio, 1.0, 1e-12);
}

TEST(AsymptoticRatio, DiagonalOneTwoThree) {
  EXPECT_NEAR(asymptotic_ratio(Steps{1, 2, 3}, Family::kDiagonal, 20).ratio, 1.0, 0.02);
}

TEST(AsymptoticRatio, Rejects) {
  EXPECT_THROW(asymptotic_ratio(Steps{2, 4}, Family::kEven, 10), DisconnectedError);
  EXPECT_THROW(asymptotic_ratio(Steps{1, 4}, Family::kEven, 8), std::invalid_argument);
  EXPECT_THROW(asymptotic_ratio(Steps{1, 3}, Family::kDiagonal, 3), std::invalid_argument);
}

TEST(AsymptoticRatio, TendsToOne) {
  for (const auto& [steps, family] : {std::pair{Steps{1, 3}, Family::kEven}, std::pair{Steps{2, 3}, Family::kEven},
                                      std::pair{Steps{1, 2, 3}, Family::kEven}, std::pair{Steps{1, 2}, Family::kDiagonal}}) {
    const MahlerEstimate m = mahler_root_product(associated_laurent(steps, family));
    double previous = 1e9;
    for (long n : {11L, 21L, 41L}) {
      const double err = std::abs(asymptotic_ratio(steps, family, n, m).ratio - 1.0);
      EXPECT_LT(err, previous) << n;
      previous = err;
    }
  }
}

TEST(ThermoLimit, Examples) {
  const auto fib = thermo_limit(Steps{1, 2}, Family::kEven, 35, 40);
  ASSERT_EQ(fib.size(), 6u);
  EXPECT_EQ(fib.back().n, 40);
  EXPECT_NEAR(fib.back().entropy, std::log((3 + std::sqrt(5.0)) / 2), 0.1);
  const auto cycle = thermo_limit(Steps{1}, Family::kEven, 3, 50);
  EXPECT_NEAR(cycle.back().entropy, std::log(50.0) / 50.0, 1e-12);
  EXPECT_DOUBLE_EQ(cycle.back().target, 0.0);
  const auto two_three = thermo_limit(Steps{2, 3}, Family::kEven, 7, 12);
  EXPECT_NEAR(two_three.front().target, std::log(2.96557263398866), 1e-12);
  // Skips non-canonical and disconnected n.
  const auto gapped = thermo_limit(Steps{2, 4}, Family::kEven, 9, 14);
  for (const auto& p : gapped) EXPECT_EQ(p.n % 2, 1);
}

TEST(Admissible, Cases) {
  EXPECT_TRUE(admissible(Steps{1, 2}, Family::kEven, 5));
  EXPECT_FALSE(admissible(Steps{1, 2}, Family::kEven, 4));
  EXPECT_FALSE(admissible(Steps{2, 4}, Family::kEven, 12));
  EXPECT_TRUE(admissible(Steps{1, 2}, Family::kDiagonal, 3));
  EXPECT_FALSE(admissible(Steps{2}, Family::kDiagonal, 4));
  EXPECT_FALSE(admissible(Steps{2, 1}, Family::kEven, 9));
}

}  // namespace
}  // namespace circulant
