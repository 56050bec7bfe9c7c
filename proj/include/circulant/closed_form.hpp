#pragma once

// Spanning-tree counts from the Chebyshev product formulas, certified as
// exact integers by high-precision evaluation.
//
// Even valency, C_n(s_1..s_k):
//   tau(n) = (n/q) prod_p |2 T_n(w_p) - 2|,   w_p the roots of P(w) = Q(w)/(w-1)
//   tau(n) = n |prod_p U_{n-1}(sqrt((w_p + 1)/2))|^2
// Odd valency, C_2n(s_1..s_k, n):
//   tau(n) = (n 4^(s_k-1)/q) prod_p (T_n(u_p) - 1) prod_p (T_n(v_p) + 1)
//   with u_p the roots of (P(u) - 1)/(u - 1) and v_p the roots of P(v) + 1.
// In both cases q = s_1^2 + ... + s_k^2.

#include "circulant/exact.hpp"
#include "circulant/graph.hpp"

#include <span>

namespace circulant {

/// Precision schedule for turning a high-precision product into an integer.
///
/// Starting from `initial_bits` plus the magnitude headroom of the product,
/// an evaluation is accepted when it lies within 2^-integrality_bits of an
/// integer with the required divisibility and the evaluation at twice the
/// precision rounds to the same integer. Otherwise the precision doubles,
/// up to `max_bits`, after which CertificationError is thrown.
struct CertificationPolicy {
  mpfr_prec_t initial_bits = 128;
  mpfr_prec_t max_bits = 8192;
  int integrality_bits = 20;
};

/// Closed form for a connected even-valency spec.
/// Throws DisconnectedError, std::invalid_argument for a diagonal spec, or
/// CertificationError.
TreeCount tau_even(const CirculantSpec& spec, const CertificationPolicy& policy = {});

/// Second-kind Chebyshev form of the even-valency count; an independent path.
TreeCount tau_even_u_form(const CirculantSpec& spec, const CertificationPolicy& policy = {});

/// Closed form for a connected diagonal (odd-valency) spec.
TreeCount tau_odd(const CirculantSpec& spec, const CertificationPolicy& policy = {});

/// tau_even or tau_odd by the spec's family.
TreeCount tau_formula(const CirculantSpec& spec, const CertificationPolicy& policy = {});

/// The even product formula on a raw step list at any n >= 1.
///
/// The eigenvalue product behind the formula treats the steps as a multiset
/// modulo n, so for n <= 2 s_k this counts spanning trees of the circulant
/// multigraph (a step equal to n/2, or two steps that coincide mod n, give
/// doubled edges). For a canonical spec it agrees with tau_even.
/// Throws DisconnectedError when gcd(steps, n) > 1.
TreeCount tau_even_steps(std::span<const long> steps, long n, const CertificationPolicy& policy = {});

/// The odd product formula on a raw step list at half-order n >= 1, with the
/// same multigraph reading. Throws DisconnectedError when gcd(steps, n) > 1.
TreeCount tau_odd_steps(std::span<const long> steps, long n, const CertificationPolicy& policy = {});

}  // namespace circulant
