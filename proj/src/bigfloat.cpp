#include "circulant/bigfloat.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace circulant {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

// Grows the destination precision in place, keeping its value.
void widen(BigFloat& x, mpfr_prec_t precision) {
  if (x.precision() < precision) mpfr_prec_round(x.raw(), precision, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs and leave `other` as a valid 2-bit zero.
  value_[0] = other.value_[0];
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(mpfr_prec_t precision) const {
  BigFloat out(precision);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

BigInt BigFloat::round_to_integer() const {
  if (!is_finite()) throw std::domain_error("cannot round a non-finite value");
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDNA);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  const std::string format = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  if (mpfr_asprintf(&buf, format.c_str(), value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

long BigFloat::exponent() const noexcept {
  if (!mpfr_regular_p(value_)) return mpfr_get_emin();
  return mpfr_get_exp(value_);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(*this, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat log2(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log2(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat exp2_int(long e, mpfr_prec_t precision) {
  BigFloat out(1L, precision);
  mpfr_mul_2si(out.raw(), out.raw(), e, MPFR_RNDN);
  return out;
}

BigFloat pi(mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_max(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigComplex::BigComplex(mpfr_prec_t precision) : re_(precision), im_(precision) {}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const mpfr_prec_t p = wider(re_, im_);
  widen(re_, p);
  widen(im_, p);
}

BigComplex::BigComplex(std::complex<double> z, mpfr_prec_t precision)
    : re_(z.real(), precision), im_(z.imag(), precision) {}

BigComplex BigComplex::with_precision(mpfr_prec_t precision) const {
  return BigComplex(re_.with_precision(precision), im_.with_precision(precision));
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigFloat re = re_ * rhs.re_ - im_ * rhs.im_;
  BigFloat im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  return *this *= reciprocal(rhs);
}

BigComplex& BigComplex::operator*=(const BigFloat& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigFloat norm(const BigComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

BigFloat abs(const BigComplex& z) {
  BigFloat out(z.precision());
  mpfr_hypot(out.raw(), z.real().raw(), z.imag().raw(), MPFR_RNDN);
  return out;
}

BigComplex reciprocal(const BigComplex& z) {
  const BigFloat n = norm(z);
  return BigComplex(z.real() / n, -(z.imag() / n));
}

BigComplex sqrt(const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  if (z.real().is_zero() && z.imag().is_zero()) return BigComplex(p);
  const BigFloat r = abs(z);
  const BigFloat half(0.5, p);
  const BigFloat two(2L, p);
  // Pick the formula that avoids cancellation in r +- re.
  if (z.real().sign() >= 0) {
    BigFloat t = sqrt((r + z.real()) * half);
    BigFloat im = z.imag() / (two * t);
    return BigComplex(std::move(t), std::move(im));
  }
  BigFloat t = sqrt((r - z.real()) * half);
  BigFloat re = abs(z.imag()) / (two * t);
  if (z.imag().sign() < 0) t = -t;
  return BigComplex(std::move(re), std::move(t));
}

BigComplex pow(const BigComplex& base, std::uint64_t exponent) {
  BigComplex result(BigFloat(1L, base.precision()), BigFloat(base.precision()));
  BigComplex square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace circulant
