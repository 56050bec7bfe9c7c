#pragma once

// Certified complex roots of integer polynomials.

#include "circulant/bigfloat.hpp"
#include "circulant/polynomial.hpp"

#include <vector>

namespace circulant {

struct CertifiedRoot {
  BigComplex value;
  /// A disk of this radius around `value` contains a true root.
  BigFloat radius;
  int multiplicity = 1;
};

class CertifiedRoots {
 public:
  CertifiedRoots(std::vector<CertifiedRoot> roots, mpfr_prec_t working_precision);

  const std::vector<CertifiedRoot>& roots() const noexcept { return roots_; }
  mpfr_prec_t working_precision() const noexcept { return precision_; }
  /// Sum of multiplicities; equals the polynomial degree.
  long count() const noexcept;
  /// Each root repeated according to its multiplicity.
  std::vector<BigComplex> expanded() const;

 private:
  std::vector<CertifiedRoot> roots_;
  mpfr_prec_t precision_;
};

/// All complex roots of a nonconstant polynomial.
///
/// Repeated roots are split off first by square-free decomposition. Each
/// square-free factor is seeded with companion-matrix eigenvalues in double
/// precision and Newton-refined at `precision` bits, falling back to
/// simultaneous Aberth iteration if Newton seeds collide. The reported radius
/// is the inclusion bound deg * |f(z)| / |f'(z)|; the disks of distinct roots
/// are checked to be disjoint.
///
/// Throws ConvergenceError when refinement does not settle within the
/// iteration budget; callers escalate the precision.
CertifiedRoots find_roots(const IntPolynomial& p, mpfr_prec_t precision);

}  // namespace circulant
