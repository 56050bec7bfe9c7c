#include "circulant/errors.hpp"
#include "circulant/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace circulant {
namespace {

std::vector<long> row0(const CirculantSpec& spec) {
  const IntegerMatrix l = laplacian(spec);
  std::vector<long> out;
  for (std::size_t c = 0; c < l.dimension(); ++c) out.push_back(l(0, c).get_si());
  return out;
}

TEST(Canonicalize, AlreadyCanonical) {
  const CirculantSpec s = canonicalize(5, {1, 2});
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s.steps(), (std::vector<long>{1, 2}));
  EXPECT_FALSE(s.diagonal());
}

TEST(Canonicalize, FoldsAndSorts) {
  const CirculantSpec s = canonicalize(16, {5, 7, 14});
  EXPECT_EQ(s.steps(), (std::vector<long>{2, 5, 7}));
}

TEST(Canonicalize, HalfOrderStepBecomesDiagonal) {
  const CirculantSpec s = canonicalize(6, {1, 3});
  EXPECT_TRUE(s.diagonal());
  EXPECT_EQ(s.order(), 3);
  EXPECT_EQ(s.steps(), (std::vector<long>{1}));
  EXPECT_EQ(s.vertex_count(), 6);
  EXPECT_EQ(s.degree(), 3);
  EXPECT_EQ(s.to_string(), "C3(1;d)");
}

TEST(Canonicalize, NegativeAndLargeStepsReduce) {
  EXPECT_EQ(canonicalize(10, {-1, 13}).steps(), (std::vector<long>{1, 3}));
}

TEST(Canonicalize, Rejects) {
  EXPECT_THROW(canonicalize(2, {1}), SpecError);
  EXPECT_THROW(canonicalize(7, {1, 6}), SpecError);  // 6 folds onto 1
  EXPECT_THROW(canonicalize(7, {7}), SpecError);
  EXPECT_THROW(canonicalize(7, {}), SpecError);
  EXPECT_THROW(canonicalize(1, {1}, true), SpecError);
  EXPECT_THROW(canonicalize(3, {3}, true), SpecError);  // the diagonal step twice
}

TEST(ParseSpec, Forms) {
  EXPECT_EQ(parse_spec("C5(1,2)"), canonicalize(5, {1, 2}));
  EXPECT_EQ(parse_spec(" C12( 1 , 5 ) "), canonicalize(12, {1, 5}));
  EXPECT_EQ(parse_spec("C3(1;d)"), canonicalize(3, {1}, true));
  EXPECT_EQ(parse_spec("C6(1,3)"), canonicalize(3, {1}, true));
}

TEST(ParseSpec, Malformed) {
  for (const char* bad : {"", "C", "C5", "C5(1,2", "5(1,2)", "C5()", "C5(1,,2)", "C5(a)", "C5(1;x)", "Cx(1)"}) {
    EXPECT_THROW(parse_spec(bad), SpecError) << bad;
  }
}

TEST(ComponentCount, Examples) {
  EXPECT_EQ(component_count(parse_spec("C5(1,2)")), 1);
  EXPECT_EQ(component_count(parse_spec("C6(2)")), 2);
  EXPECT_EQ(component_count(parse_spec("C10(2,4)")), 2);
  EXPECT_EQ(component_count(parse_spec("C6(2,3)")), 1);  // prism: the diagonal step joins the triangles
  EXPECT_EQ(component_count(canonicalize(4, {2}, true)), 2);
}

TEST(Laplacian, SmallGraphs) {
  EXPECT_EQ(row0(parse_spec("C3(1)")), (std::vector<long>{2, -1, -1}));
  EXPECT_EQ(row0(parse_spec("C4(1)")), (std::vector<long>{2, -1, 0, -1}));
  EXPECT_EQ(row0(canonicalize(2, {1}, true)), (std::vector<long>{3, -1, -1, -1}));
  const IntegerMatrix l = laplacian(parse_spec("C3(1)"));
  EXPECT_EQ(l(1, 0), -1);
  EXPECT_EQ(l(1, 1), 2);
}

TEST(Laplacian, SymmetricWithZeroRowSums) {
  for (const char* s : {"C9(1,4)", "C12(1,5;d)", "C8(1,2,3)", "C10(2,3;d)"}) {
    const IntegerMatrix l = laplacian(parse_spec(s));
    EXPECT_TRUE(l.is_symmetric()) << s;
    for (std::size_t r = 0; r < l.dimension(); ++r) {
      BigInt sum = 0;
      for (std::size_t c = 0; c < l.dimension(); ++c) sum += l(r, c);
      EXPECT_EQ(sum, 0) << s;
    }
  }
}

TEST(Laplacian, MinorDropsRowAndColumn) {
  const IntegerMatrix m = laplacian(parse_spec("C4(1)")).minor(0);
  ASSERT_EQ(m.dimension(), 3u);
  EXPECT_EQ(m(0, 0), 2);
  EXPECT_EQ(m(0, 1), -1);
  EXPECT_EQ(m(0, 2), 0);
}

TEST(Eigenvalue, Examples) {
  EXPECT_NEAR(eigenvalue(parse_spec("C4(1)"), 2), 4.0, 1e-12);
  EXPECT_NEAR(eigenvalue(parse_spec("C11(2,5)"), 0), 0.0, 1e-12);
}

TEST(Eigenvalue, DiagonalMiddleValue) {
  // lambda_n of C_2n(s..., n) is 4p for even n and 4p + 2 for odd n, p the odd-step count.
  for (long n = 3; n <= 12; ++n) {
    for (const auto& steps : {std::vector<long>{1}, std::vector<long>{1, 2}, std::vector<long>{2}, std::vector<long>{1, 2, 3}}) {
      if (steps.back() >= n) continue;
      const CirculantSpec spec = canonicalize(n, steps, true);
      long p = 0;
      for (const long s : steps) p += s % 2;
      EXPECT_NEAR(eigenvalue(spec, n), n % 2 == 0 ? 4.0 * p : 4.0 * p + 2.0, 1e-9) << spec.to_string();
    }
  }
}

TEST(Spectrum, MatchesDirectEvaluation) {
  for (const char* s : {"C17(1,3,8)", "C9(2,4;d)", "C40(1,2,3,4,5)"}) {
    const CirculantSpec spec = parse_spec(s);
    const auto values = spectrum(spec);
    ASSERT_EQ(values.size(), static_cast<std::size_t>(spec.vertex_count()));
    for (long j = 0; j < spec.vertex_count(); ++j) {
      EXPECT_NEAR(values[static_cast<std::size_t>(j)], eigenvalue(spec, j), 1e-9) << s << " j=" << j;
    }
  }
}

// Random canonical specs; fixed seed for reproducibility.
class SpecGenerator {
 public:
  explicit SpecGenerator(std::uint64_t seed) : rng_(seed) {}
  CirculantSpec next() {
    while (true) {
      const bool diagonal = coin_(rng_);
      const long order = std::uniform_int_distribution<long>(diagonal ? 2 : 3, 30)(rng_);
      const long limit = diagonal ? order - 1 : (order - 1) / 2;
      if (limit < 1) continue;
      std::vector<long> steps;
      for (long s = 1; s <= limit; ++s) {
        if (coin_(rng_)) steps.push_back(s);
      }
      if (steps.empty()) continue;
      return canonicalize(order, steps, diagonal);
    }
  }

 private:
  std::mt19937_64 rng_;
  std::bernoulli_distribution coin_{0.5};
};

TEST(Property, CanonicalizeIsIdempotent) {
  SpecGenerator gen(11);
  for (int i = 0; i < 300; ++i) {
    const CirculantSpec s = gen.next();
    EXPECT_EQ(canonicalize(s.order(), s.steps(), s.diagonal()), s);
    EXPECT_EQ(parse_spec(s.to_string()), s);
  }
}

TEST(Property, SpectrumSymmetricAndPositiveWhenConnected) {
  SpecGenerator gen(12);
  for (int i = 0; i < 200; ++i) {
    const CirculantSpec s = gen.next();
    const auto values = spectrum(s);
    const long big_n = s.vertex_count();
    EXPECT_NEAR(values[0], 0.0, 1e-9);
    for (long j = 1; j < big_n; ++j) {
      EXPECT_NEAR(values[static_cast<std::size_t>(j)], values[static_cast<std::size_t>(big_n - j)], 1e-9);
      if (is_connected(s)) {
        EXPECT_GT(values[static_cast<std::size_t>(j)], 1e-9) << s.to_string();
      }
    }
  }
}

TEST(Property, MultiplierPreservesSpectrum) {
  SpecGenerator gen(13);
  for (int i = 0; i < 100; ++i) {
    const CirculantSpec s = gen.next();
    const long big_n = s.vertex_count();
    for (long r = 2; r < big_n; ++r) {
      if (std::gcd(r, big_n) != 1) continue;
      std::vector<long> scaled;
      for (const long step : s.steps()) scaled.push_back(step * r % big_n);
      const CirculantSpec image = canonicalize(s.order(), scaled, s.diagonal());
      EXPECT_EQ(image.diagonal(), s.diagonal());
      auto a = spectrum(s);
      auto b = spectrum(image);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a[j], b[j], 1e-9);
      break;
    }
  }
}

}  // namespace
}  // namespace circulant
