#pragma once

// Ground-truth spanning-tree counts via the matrix-tree theorem.

#include "circulant/bigfloat.hpp"
#include "circulant/graph.hpp"

#include <string>

namespace circulant {

/// Arbitrary-precision nonnegative spanning-tree count.
class TreeCount {
 public:
  TreeCount() = default;
  /// Throws std::invalid_argument if value is negative.
  explicit TreeCount(BigInt value);

  const BigInt& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const TreeCount&, const TreeCount&) = default;

 private:
  BigInt value_{0};
};

struct OracleConfig {
  static constexpr long kDefaultCeiling = 512;

  /// Largest vertex count the oracle will accept.
  long vertex_ceiling = kDefaultCeiling;

  /// Default ceiling, overridden by CIRC_ORACLE_CEILING when it holds a
  /// positive integer.
  static OracleConfig from_environment();
};

/// Determinant of a square integer matrix by fraction-free Bareiss
/// elimination. Pivots are taken in order; a row swap happens only when a
/// pivot vanishes.
BigInt bareiss_determinant(IntegerMatrix matrix);

/// Number of spanning trees: the Laplacian determinant with row and column 0
/// removed. Returns 0 for disconnected graphs.
/// Throws OracleCeilingError if the vertex count exceeds the ceiling.
TreeCount tau_oracle(const CirculantSpec& spec, const OracleConfig& config = {});

}  // namespace circulant
