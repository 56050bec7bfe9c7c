#include "circulant/arithmetic.hpp"

#include "circulant/closed_form.hpp"
#include "circulant/errors.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace circulant {

std::string_view family_name(Family family) noexcept {
  return family == Family::kEven ? "even" : "diagonal";
}

Family parse_family(std::string_view name) {
  if (name == "even") return Family::kEven;
  if (name == "diagonal" || name == "odd") return Family::kDiagonal;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected even or diagonal)");
}

long square_free_part(long m) {
  if (m < 1) throw std::invalid_argument("square_free_part needs m >= 1");
  long part = 1;
  auto strip = [&](long p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) part *= p;
  };
  strip(2);
  strip(3);
  strip(5);
  // Wheel of circumference 30 over the residues coprime to 2, 3, 5.
  static constexpr std::array<long, 8> kGaps{4, 2, 4, 2, 4, 6, 2, 6};
  long p = 7;
  for (std::size_t i = 0; p * p <= m; p += kGaps[i], i = (i + 1) % kGaps.size()) strip(p);
  if (m > 1) part *= m;
  return part;
}

BigInt isqrt(const BigInt& m) {
  if (m < 0) throw std::invalid_argument("isqrt of a negative number");
  if (m < 2) return m;
  // Start above the root: 2^ceil(bits/2) >= sqrt(m); Newton then decreases monotonically.
  BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((mpz_sizeinbase(m.get_mpz_t(), 2) + 1) / 2);
  while (true) {
    BigInt y = (x + m / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<BigInt> exact_sqrt(const BigInt& m) {
  if (m < 0) return std::nullopt;
  BigInt r = isqrt(m);
  if (r * r != m) return std::nullopt;
  return r;
}

long odd_step_count(std::span<const long> steps) {
  long p = 0;
  for (const long s : steps) p += (s % 2 != 0) ? 1 : 0;
  return p;
}

long expected_coefficient(std::span<const long> steps, Family family, long n) {
  const long p = odd_step_count(steps);
  const bool even_n = n % 2 == 0;
  if (family == Family::kEven) {
    if (!even_n) return 1;
    if (p == 0) throw DisconnectedError("even n with only even steps is disconnected", 2);
    return square_free_part(p);
  }
  return even_n ? square_free_part(2 * p) : square_free_part(2 * p + 1);
}

long expected_coefficient(const CirculantSpec& spec) {
  return expected_coefficient(spec.steps(), spec.diagonal() ? Family::kDiagonal : Family::kEven, spec.order());
}

Decomposition decompose(std::span<const long> steps, Family family, long n, const TreeCount& tau) {
  if (tau.is_zero()) throw std::invalid_argument("cannot decompose tau = 0");
  const long c = expected_coefficient(steps, family, n);
  const BigInt cn = BigInt(c) * n;
  if (!mpz_divisible_p(tau.value().get_mpz_t(), cn.get_mpz_t())) {
    throw TheoremViolation("tau = " + tau.to_string() + " is not divisible by c*n = " + cn.get_str());
  }
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), tau.value().get_mpz_t(), cn.get_mpz_t());
  auto root = exact_sqrt(quotient);
  if (!root) {
    throw TheoremViolation("tau/(c*n) = " + quotient.get_str() + " is not a perfect square");
  }
  return Decomposition{family, n, c, std::move(*root), tau};
}

Decomposition decompose(const CirculantSpec& spec, const TreeCount& tau) {
  return decompose(spec.steps(), spec.diagonal() ? Family::kDiagonal : Family::kEven, spec.order(), tau);
}

std::vector<Decomposition> sequence_a(std::span<const long> steps, Family family, long first, long last) {
  std::vector<Decomposition> out;
  for (long n = first; n <= last; ++n) {
    const TreeCount tau = family == Family::kEven ? tau_even_steps(steps, n) : tau_odd_steps(steps, n);
    out.push_back(decompose(steps, family, n, tau));
  }
  return out;
}

bool satisfies_recursion(std::span<const BigInt> values, std::span<const long> coeffs) {
  for (std::size_t i = coeffs.size(); i < values.size(); ++i) {
    BigInt predicted = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) predicted += coeffs[j] * values[i - 1 - j];
    if (predicted != values[i]) return false;
  }
  return true;
}

std::vector<BigInt> run_recursion(std::span<const BigInt> seeds, std::span<const long> coeffs, std::size_t count) {
  std::vector<BigInt> out(seeds.begin(), seeds.end());
  while (out.size() < count) {
    BigInt next = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) next += coeffs[j] * out[out.size() - 1 - j];
    out.push_back(std::move(next));
  }
  out.resize(count);
  return out;
}

}  // namespace circulant
