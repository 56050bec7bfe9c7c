#include "circulant/exact.hpp"

#include "circulant/errors.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace circulant {

TreeCount::TreeCount(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw std::invalid_argument("tree count cannot be negative");
}

OracleConfig OracleConfig::from_environment() {
  OracleConfig config;
  if (const char* env = std::getenv("CIRC_ORACLE_CEILING")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) config.vertex_ceiling = value;
  }
  return config;
}

BigInt bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.dimension();
  if (n == 0) return 1;
  BigInt previous = 1;
  BigInt scratch;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      // Only reachable for singular-leading-minor inputs; never for a
      // connected reduced Laplacian, which is positive definite.
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m_ij <- (m_kk m_ij - m_ik m_kj) / previous, exact by Sylvester's identity.
        scratch = m(i, k) * m(k, j);
        m(i, j) *= m(k, k);
        m(i, j) -= scratch;
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return negate ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

TreeCount tau_oracle(const CirculantSpec& spec, const OracleConfig& config) {
  const long n = spec.vertex_count();
  if (n > config.vertex_ceiling) {
    throw OracleCeilingError("oracle ceiling exceeded: " + std::to_string(n) + " vertices > " +
                             std::to_string(config.vertex_ceiling));
  }
  if (!is_connected(spec)) return TreeCount(0);
  BigInt det = bareiss_determinant(laplacian(spec).minor(0));
  // Zero pivot on a connected graph cannot happen; zero is the disconnected answer.
  return TreeCount(std::move(det));
}

}  // namespace circulant
