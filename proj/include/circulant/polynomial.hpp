#pragma once

// Dense univariate polynomials over the integers.

#include "circulant/bigfloat.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace circulant {

class IntPolynomial {
 public:
  /// The zero polynomial.
  IntPolynomial() = default;
  /// Coefficients lowest degree first; trailing zeros are trimmed.
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  /// c * w^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of w^k, zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const BigInt& leading() const;

  IntPolynomial derivative() const;
  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  /// Divided by its content, with a positive leading coefficient.
  IntPolynomial primitive_part() const;

  BigInt evaluate(const BigInt& w) const;
  mpq_class evaluate(const mpq_class& w) const;
  BigComplex evaluate(const BigComplex& w) const;
  std::complex<double> evaluate(std::complex<double> w) const;
  /// p(w) and p'(w) in one Horner pass.
  std::pair<BigComplex, BigComplex> evaluate_with_derivative(const BigComplex& w) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& rhs);
  IntPolynomial operator-() const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "4*w^3 - 3*w" style rendering.
  std::string to_string(const std::string& var = "w") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Division by (w - root) via synthetic division.
PolynomialDivision divide_by_linear(const IntPolynomial& p, const BigInt& root);

/// Quotient p / d when d divides p over Z[w]. Throws TheoremViolation if the
/// remainder is nonzero or a quotient coefficient is not integral.
IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& d);

/// lc(d)^(deg p - deg d + 1) * p = q d + r with deg r < deg d.
PolynomialDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& d);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Yun's square-free decomposition of a nonconstant polynomial:
/// p = c * prod_i f_i^i with each f_i primitive, square-free and pairwise
/// coprime. Entries are (f_i, i) for the nonconstant factors.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);

}  // namespace circulant
