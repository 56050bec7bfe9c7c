#pragma once

// Square-free decompositions tau(n) = c * n * a(n)^2 and the sequences a(n).

#include "circulant/bigfloat.hpp"
#include "circulant/exact.hpp"
#include "circulant/graph.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace circulant {

enum class Family { kEven, kDiagonal };

std::string_view family_name(Family family) noexcept;
/// "even" or "diagonal"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

struct Decomposition {
  Family family = Family::kEven;
  long n = 0;
  /// The square-free multiplier fixed by the parity of n and the step set.
  long coefficient = 1;
  /// Nonnegative; tau = coefficient * n * a^2.
  BigInt a;
  TreeCount tau;
};

/// Unique square-free q with m = q r^2. Trial division by a 2,3,5 wheel.
/// Throws std::invalid_argument for m < 1.
long square_free_part(long m);

/// floor(sqrt(m)) by Newton's iteration on big integers. m >= 0.
BigInt isqrt(const BigInt& m);

/// sqrt(m) if m is a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& m);

/// Number of odd steps.
long odd_step_count(std::span<const long> steps);

/// The multiplier for a step family at n:
///   even family:     1 for odd n, square_free_part(p) for even n;
///   diagonal family: square_free_part(2p+1) for odd n, square_free_part(2p) for even n;
/// p the number of odd steps. Throws DisconnectedError for the even family
/// with n even and p = 0.
long expected_coefficient(std::span<const long> steps, Family family, long n);
long expected_coefficient(const CirculantSpec& spec);

/// Splits tau = c n a^2 with c = expected_coefficient. Throws
/// std::invalid_argument for tau = 0 and TheoremViolation if c n does not
/// divide tau or the quotient is not a perfect square.
Decomposition decompose(std::span<const long> steps, Family family, long n, const TreeCount& tau);
Decomposition decompose(const CirculantSpec& spec, const TreeCount& tau);

/// a(n) over [first, last] for a fixed step family, with tau from the
/// product formula. For n small enough that the steps are not distinct
/// below n/2 this is the multigraph reading of the formula, which is what
/// published sequences and their recursions use.
std::vector<Decomposition> sequence_a(std::span<const long> steps, Family family, long first, long last);

/// True if values[i] = sum_j coeffs[j] * values[i-1-j] for every i >= coeffs.size().
bool satisfies_recursion(std::span<const BigInt> values, std::span<const long> coeffs);

/// Extends `seeds` by the linear recursion until it has `count` terms.
std::vector<BigInt> run_recursion(std::span<const BigInt> seeds, std::span<const long> coeffs, std::size_t count);

}  // namespace circulant
