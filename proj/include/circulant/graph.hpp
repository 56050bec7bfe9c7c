#pragma once

// Circulant graph specifications C_n(s_1,...,s_k) and the odd-valency form
// C_2n(s_1,...,s_k,n), plus the exact Laplacian and its closed-form spectrum.

#include "circulant/bigfloat.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace circulant {

/// A canonical circulant graph.
///
/// Even-valency form: `order` vertices, 1 <= s_1 < ... < s_k < order/2.
/// Diagonal form: `order` is the half-order n, the graph has 2n vertices and
/// carries the extra step n, and 1 <= s_1 < ... < s_k < n.
///
/// Instances are only produced by `canonicalize` (or `parse_spec`), so every
/// CirculantSpec in the program satisfies these invariants.
class CirculantSpec {
 public:
  long order() const noexcept { return order_; }
  const std::vector<long>& steps() const noexcept { return steps_; }
  bool diagonal() const noexcept { return diagonal_; }
  /// Total vertex count: order, or 2*order in the diagonal form.
  long vertex_count() const noexcept { return diagonal_ ? 2 * order_ : order_; }
  /// Vertex degree: 2k, or 2k+1 in the diagonal form.
  long degree() const noexcept;
  long largest_step() const noexcept { return steps_.back(); }

  /// Literal form, e.g. "C12(1,3)" or "C12(1,2;d)".
  std::string to_string() const;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  friend CirculantSpec canonicalize(long order, const std::vector<long>& raw_steps, bool diagonal);
  CirculantSpec(long order, std::vector<long> steps, bool diagonal)
      : order_(order), steps_(std::move(steps)), diagonal_(diagonal) {}

  long order_;
  std::vector<long> steps_;
  bool diagonal_;
};

/// Reduces steps modulo the vertex count and folds s -> min(s, N - s).
///
/// For a non-diagonal request, a step that folds to order/2 turns the result
/// into the diagonal form with half-order order/2. For a diagonal request,
/// `order` is the half-order n and steps are folded modulo 2n.
/// Throws SpecError on order < 3 (or half-order < 2), a step that is 0 mod N,
/// duplicate folded steps, or an empty step set after folding.
CirculantSpec canonicalize(long order, const std::vector<long>& raw_steps, bool diagonal = false);

/// Parses `C<n>(<s1>,<s2>,...)` with an optional trailing `;d` diagonal marker.
/// The result is canonicalized. Throws SpecError on malformed input.
CirculantSpec parse_spec(std::string_view literal);

/// Number of connected components: gcd of the steps and the vertex count N.
/// In the diagonal form the step N/2 takes part in the gcd.
long component_count(const CirculantSpec& spec);

inline bool is_connected(const CirculantSpec& spec) { return component_count(spec) == 1; }

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  explicit IntegerMatrix(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  BigInt& operator()(std::size_t row, std::size_t col) { return entries_[row * dimension_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dimension_ + col];
  }
  bool is_symmetric() const;
  /// Copy with row and column `index` removed.
  IntegerMatrix minor(std::size_t index) const;

 private:
  std::size_t dimension_;
  std::vector<BigInt> entries_;
};

/// Laplacian D - A of the circulant graph, N x N.
IntegerMatrix laplacian(const CirculantSpec& spec);

/// Laplacian coefficients of the graph as a cosine series: the symbol
/// lambda(theta) = sum_m c_m cos(m theta) with c_0 the degree, c_s = -2 per
/// step, and c_n = -1 for the diagonal step. Evaluating at theta = 2 pi j / N
/// gives the j-th eigenvalue.
std::vector<double> laplacian_symbol(const CirculantSpec& spec);

/// lambda_j for j in [0, N).
double eigenvalue(const CirculantSpec& spec, long j);

/// All N eigenvalues, evaluated with the runtime-selected cosine-series kernel.
std::vector<double> spectrum(const CirculantSpec& spec);

}  // namespace circulant
