#pragma once

// Chebyshev polynomials over Z and the characteristic polynomials whose
// roots drive the closed-form tree counts.

#include "circulant/bigfloat.hpp"
#include "circulant/polynomial.hpp"

#include <cstdint>
#include <span>

namespace circulant {

/// T_m, first kind: T_0 = 1, T_1 = w, T_m = 2w T_{m-1} - T_{m-2}.
IntPolynomial cheb_t(std::size_t m);

/// U_m, second kind: U_0 = 1, U_1 = 2w, same recurrence.
IntPolynomial cheb_u(std::size_t m);

/// T_n(w) = (q^n + q^-n) / 2 with q = w + sqrt(w^2 - 1), taking the branch
/// with |q| >= 1. O(log n) multiplications at the precision of `w`.
BigComplex cheb_eval_large(const BigComplex& w, std::uint64_t n);

/// U_{n-1}(x) = (q^n - q^-n) / (q - q^-1), same branch convention. Falls back
/// to the three-term recurrence when q is too close to +-1 for the quotient
/// to be accurate.
BigComplex cheb_u_eval_large(const BigComplex& x, std::uint64_t n);

/// P(w) = sum_j (T_{s_j}(w) - 1) / (w - 1), degree s_k - 1, P(1) = sum s_j^2.
/// The division is exact; a nonzero remainder throws TheoremViolation.
IntPolynomial build_even_char(std::span<const long> steps);

/// Q(w) = sum_j (T_{s_j}(w) - 1) = (w - 1) P(w).
IntPolynomial build_even_q(std::span<const long> steps);

/// P(w) = 2k + 1 - 2 sum_i T_{s_i}(w), degree s_k, P(1) = 1, P'(1) = -2 sum s_i^2.
IntPolynomial build_odd_char(std::span<const long> steps);

/// sum of squared steps.
long step_square_sum(std::span<const long> steps);

}  // namespace circulant
