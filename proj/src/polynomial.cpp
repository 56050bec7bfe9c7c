#include "circulant/polynomial.hpp"

#include "circulant/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace circulant {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (const long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out(coeffs_);
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& w) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& w) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * w + mpq_class(*it);
    acc.canonicalize();
  }
  return acc;
}

BigComplex IntPolynomial::evaluate(const BigComplex& w) const {
  const mpfr_prec_t p = w.precision();
  BigComplex acc(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= w;
    acc += BigComplex(BigFloat(*it, p), BigFloat(p));
  }
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> w) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + it->get_d();
  return acc;
}

std::pair<BigComplex, BigComplex> IntPolynomial::evaluate_with_derivative(const BigComplex& w) const {
  const mpfr_prec_t p = w.precision();
  BigComplex value(p);
  BigComplex slope(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    slope *= w;
    slope += value;
    value *= w;
    value += BigComplex(BigFloat(*it, p), BigFloat(p));
  }
  return {std::move(value), std::move(slope)};
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const BigInt& c = coeffs_[idx];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && idx != 0;
    if (!unit) out += mag.get_str();
    if (idx >= 1) {
      if (!unit) out += "*";
      out += var;
      if (idx >= 2) out += "^" + std::to_string(idx);
    }
  }
  return out;
}

PolynomialDivision divide_by_linear(const IntPolynomial& p, const BigInt& root) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {IntPolynomial(), p};
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * root;
  }
  return {IntPolynomial(std::move(q)), IntPolynomial::constant(carry)};
}

PolynomialDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.degree() < d.degree()) return {IntPolynomial(), p};
  const auto& dc = d.coefficients();
  const BigInt& lead = d.leading();
  std::vector<BigInt> r = p.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(p.degree() - d.degree() + 1));
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  for (std::size_t top = r.size(); top-- > dd;) {
    const std::size_t shift = top - dd;
    const BigInt factor = r[top];
    // Scale everything so far by lead, then cancel the top term.
    for (auto& x : r) x *= lead;
    for (auto& x : q) x *= lead;
    q[shift] += factor;
    for (std::size_t k = 0; k <= dd; ++k) r[shift + k] -= factor * dc[k];
  }
  r.resize(dd);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw TheoremViolation("exact division: divisor degree exceeds dividend");
  const auto& dc = d.coefficients();
  const BigInt& lead = d.leading();
  std::vector<BigInt> r = p.coefficients();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  std::vector<BigInt> q(r.size() - dd);
  for (std::size_t top = r.size(); top-- > dd;) {
    const std::size_t shift = top - dd;
    if (!mpz_divisible_p(r[top].get_mpz_t(), lead.get_mpz_t())) {
      throw TheoremViolation("exact division: non-integral quotient coefficient");
    }
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), r[top].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t k = 0; k <= dd; ++k) r[shift + k] -= factor * dc[k];
    q[shift] = std::move(factor);
  }
  for (std::size_t k = 0; k < dd; ++k) {
    if (r[k] != 0) throw TheoremViolation("exact division: nonzero remainder");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_divide(x, y).remainder.primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::domain_error("square-free decomposition needs a nonconstant polynomial");
  const IntPolynomial f = p.primitive_part();
  const IntPolynomial df = f.derivative();
  const IntPolynomial a0 = gcd(f, df);

  // Yun: b_1 = f/a0, d_1 = f'/a0 - b_1'. Divisions by primitive divisors stay
  // in Z[w] by Gauss's lemma.
  IntPolynomial b = divide_exact(f, a0);
  IntPolynomial d = divide_exact(df, a0) - b.derivative();
  std::vector<std::pair<IntPolynomial, int>> out;
  for (int i = 1; b.degree() >= 1; ++i) {
    const IntPolynomial factor = d.is_zero() ? b.primitive_part() : gcd(b, d);
    b = divide_exact(b, factor);
    d = divide_exact(d, factor) - b.derivative();
    if (factor.degree() >= 1) out.emplace_back(factor, i);
  }
  return out;
}

}  // namespace circulant
