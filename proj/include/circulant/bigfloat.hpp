#pragma once

// Thin RAII wrappers over MPFR for the closed-form and root-finding paths.
// Results of binary operations carry the larger of the operand precisions.

#include <mpfr.h>
#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace circulant {

using BigInt = mpz_class;

class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(double value, mpfr_prec_t precision);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(int value, mpfr_prec_t precision) : BigFloat(static_cast<long>(value), precision) {}
  BigFloat(const BigInt& value, mpfr_prec_t precision);
  /// Parses a decimal string such as "-1.5" or "3e-7".
  BigFloat(const std::string& decimal, mpfr_prec_t precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  /// Same value rounded to a new precision.
  BigFloat with_precision(mpfr_prec_t precision) const;

  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer, ties away from zero.
  BigInt round_to_integer() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  /// Binary exponent e such that |x| is in [2^(e-1), 2^e); very negative for zero.
  long exponent() const noexcept;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log2(const BigFloat& x);
BigFloat exp(const BigFloat& x);
/// 2^e at the given precision.
BigFloat exp2_int(long e, mpfr_prec_t precision);
BigFloat pi(mpfr_prec_t precision);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Complex number with BigFloat parts of a common precision.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t precision = BigFloat::kDefaultPrecision);
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(std::complex<double> z, mpfr_prec_t precision);

  const BigFloat& real() const noexcept { return re_; }
  const BigFloat& imag() const noexcept { return im_; }
  mpfr_prec_t precision() const noexcept { return re_.precision(); }
  BigComplex with_precision(mpfr_prec_t precision) const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigFloat& rhs);
  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  friend BigComplex operator+(BigComplex lhs, const BigComplex& rhs) { return lhs += rhs; }
  friend BigComplex operator-(BigComplex lhs, const BigComplex& rhs) { return lhs -= rhs; }
  friend BigComplex operator*(BigComplex lhs, const BigComplex& rhs) { return lhs *= rhs; }
  friend BigComplex operator/(BigComplex lhs, const BigComplex& rhs) { return lhs /= rhs; }
  friend BigComplex operator*(BigComplex lhs, const BigFloat& rhs) { return lhs *= rhs; }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
/// Principal square root (branch cut on the negative real axis).
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& base, std::uint64_t exponent);
BigComplex reciprocal(const BigComplex& z);

}  // namespace circulant
