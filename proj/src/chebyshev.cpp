#include "circulant/chebyshev.hpp"

#include "circulant/errors.hpp"

#include <stdexcept>

namespace circulant {

namespace {

IntPolynomial chebyshev_recurrence(std::size_t m, IntPolynomial first) {
  IntPolynomial prev{1};
  if (m == 0) return prev;
  IntPolynomial cur = std::move(first);
  const IntPolynomial two_w{0, 2};
  for (std::size_t k = 2; k <= m; ++k) {
    IntPolynomial next = two_w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Larger-modulus root of q^2 - 2wq + 1 = 0.
BigComplex dominant_q(const BigComplex& w) {
  const mpfr_prec_t p = w.precision();
  const BigComplex one(BigFloat(1L, p), BigFloat(p));
  const BigComplex root = sqrt(w * w - one);
  BigComplex plus = w + root;
  BigComplex minus = w - root;
  return norm(plus) >= norm(minus) ? plus : minus;
}

}  // namespace

IntPolynomial cheb_t(std::size_t m) { return chebyshev_recurrence(m, IntPolynomial{0, 1}); }

IntPolynomial cheb_u(std::size_t m) { return chebyshev_recurrence(m, IntPolynomial{0, 2}); }

BigComplex cheb_eval_large(const BigComplex& w, std::uint64_t n) {
  const mpfr_prec_t p = w.precision();
  const BigComplex q_n = pow(dominant_q(w), n);
  BigComplex sum = q_n + reciprocal(q_n);
  return sum * BigFloat(0.5, p);
}

BigComplex cheb_u_eval_large(const BigComplex& x, std::uint64_t n) {
  const mpfr_prec_t p = x.precision();
  if (n == 0) return BigComplex(p);
  const BigComplex q = dominant_q(x);
  const BigComplex gap = q - reciprocal(q);
  // |q - 1/q| below 2^(-p/4) loses a quarter of the working bits in the quotient.
  if (abs(gap) > exp2_int(-static_cast<long>(p) / 4, p)) {
    const BigComplex q_n = pow(q, n);
    return (q_n - reciprocal(q_n)) / gap;
  }
  // Three-term recurrence up to U_{n-1}.
  const BigComplex two_x = x * BigFloat(2L, p);
  BigComplex prev(BigFloat(1L, p), BigFloat(p));
  if (n == 1) return prev;
  BigComplex cur = two_x;
  for (std::uint64_t m = 2; m < n; ++m) {
    BigComplex next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

long step_square_sum(std::span<const long> steps) {
  long q = 0;
  for (const long s : steps) q += s * s;
  return q;
}

IntPolynomial build_even_q(std::span<const long> steps) {
  IntPolynomial q;
  for (const long s : steps) {
    if (s <= 0) throw std::invalid_argument("steps must be positive");
    q += cheb_t(static_cast<std::size_t>(s)) - IntPolynomial{1};
  }
  return q;
}

IntPolynomial build_even_char(std::span<const long> steps) {
  auto [quotient, remainder] = divide_by_linear(build_even_q(steps), BigInt(1));
  if (!remainder.is_zero()) throw TheoremViolation("sum of (T_s - 1) is not divisible by (w - 1)");
  return quotient;
}

IntPolynomial build_odd_char(std::span<const long> steps) {
  IntPolynomial sum;
  for (const long s : steps) {
    if (s <= 0) throw std::invalid_argument("steps must be positive");
    sum += cheb_t(static_cast<std::size_t>(s));
  }
  const long k = static_cast<long>(steps.size());
  return IntPolynomial{2 * k + 1} - sum * BigInt(2);
}

}  // namespace circulant
