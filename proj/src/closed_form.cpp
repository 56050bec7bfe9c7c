#include "circulant/closed_form.hpp"

#include "circulant/chebyshev.hpp"
#include "circulant/errors.hpp"
#include "circulant/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace circulant {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

using Evaluator = std::function<BigFloat(mpfr_prec_t)>;

struct Candidate {
  BigInt value;
  bool ok = false;
};

Candidate round_and_check(const Evaluator& eval, mpfr_prec_t bits, const BigInt& divisor, int integrality_bits) {
  Candidate out;
  try {
    const BigFloat v = eval(bits);
    if (!v.is_finite()) return out;
    out.value = v.round_to_integer();
    const BigFloat gap = abs(v - BigFloat(out.value, v.precision()));
    out.ok = gap < exp2_int(-integrality_bits, 64) && out.value > 0 &&
             mpz_divisible_p(out.value.get_mpz_t(), divisor.get_mpz_t()) != 0;
  } catch (const ConvergenceError&) {
    out.ok = false;
  }
  return out;
}

// Runs the doubling schedule and returns the certified integer divided by `divisor`.
BigInt certify(const Evaluator& eval, mpfr_prec_t start_bits, const BigInt& divisor,
               const CertificationPolicy& policy, const std::string& what) {
  mpfr_prec_t bits = std::min(std::max(start_bits, policy.initial_bits), policy.max_bits / 2);
  Candidate low = round_and_check(eval, bits, divisor, policy.integrality_bits);
  while (2 * bits <= policy.max_bits) {
    Candidate high = round_and_check(eval, 2 * bits, divisor, policy.integrality_bits);
    if (low.ok && high.ok && low.value == high.value) {
      BigInt quotient;
      mpz_divexact(quotient.get_mpz_t(), high.value.get_mpz_t(), divisor.get_mpz_t());
      return quotient;
    }
    low = std::move(high);
    bits *= 2;
  }
  throw CertificationError("could not certify " + what + " as an integer within " +
                           std::to_string(policy.max_bits) + " bits");
}

long gcd_with(std::span<const long> steps, long n) {
  long g = n;
  for (const long s : steps) g = std::gcd(g, s);
  return g;
}

void require_steps(std::span<const long> steps, long n) {
  if (steps.empty()) throw std::invalid_argument("empty step list");
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (const long s : steps) {
    if (s <= 0) throw std::invalid_argument("steps must be positive");
  }
  if (const long g = gcd_with(steps, n); g != 1) {
    throw DisconnectedError("graph has " + std::to_string(g) + " components", g);
  }
}

long largest(std::span<const long> steps) { return *std::max_element(steps.begin(), steps.end()); }

BigComplex unit(mpfr_prec_t p) { return BigComplex(BigFloat(1L, p), BigFloat(p)); }

// Bits needed above the initial budget: log2 of the product's magnitude,
// estimated from roots found at the initial precision. Each factor grows
// like |q(w)|^n with q(w) = w + sqrt(w^2 - 1), |q| >= 1.
mpfr_prec_t headroom_bits(const std::vector<IntPolynomial>& polys, long n, const BigInt& scale) {
  double bits = static_cast<double>(mpz_sizeinbase(scale.get_mpz_t(), 2)) + std::log2(static_cast<double>(n)) + 8.0;
  for (const auto& poly : polys) {
    if (poly.degree() < 1) continue;
    for (const auto& w : find_roots(poly, 128).expanded()) {
      const std::complex<double> wd = w.to_complex();
      const std::complex<double> root = std::sqrt(wd * wd - 1.0);
      const double q = std::max(std::abs(wd + root), std::abs(wd - root));
      bits += static_cast<double>(n) * std::log2(std::max(q, 1.0));
    }
  }
  return static_cast<mpfr_prec_t>(std::ceil(bits));
}

std::vector<BigComplex> roots_or_empty(const IntPolynomial& p, mpfr_prec_t bits) {
  if (p.degree() < 1) return {};
  return find_roots(p, bits).expanded();
}

void require_family(const CirculantSpec& spec, bool diagonal) {
  if (spec.diagonal() != diagonal) {
    throw std::invalid_argument(spec.to_string() + (diagonal ? " is not a diagonal spec" : " is a diagonal spec"));
  }
  if (const long c = component_count(spec); c != 1) {
    throw DisconnectedError(spec.to_string() + " has " + std::to_string(c) + " components", c);
  }
}

}  // namespace

TreeCount tau_even_steps(std::span<const long> steps, long n, const CertificationPolicy& policy) {
  require_steps(steps, n);
  const IntPolynomial p = build_even_char(steps);
  const BigInt q = step_square_sum(steps);
  const auto un = static_cast<std::uint64_t>(n);

  // n * prod |2 T_n(w_p) - 2| = q * tau.
  const Evaluator eval = [&](mpfr_prec_t bits) {
    BigFloat product(static_cast<long>(n), bits);
    const BigComplex two(BigFloat(2L, bits), BigFloat(bits));
    for (const auto& w : roots_or_empty(p, bits + kGuardBits)) {
      const BigComplex t = cheb_eval_large(w.with_precision(bits + kGuardBits), un);
      product *= abs(two * t - two).with_precision(bits);
    }
    return product;
  };
  const mpfr_prec_t start = policy.initial_bits + headroom_bits({p}, n, q);
  return TreeCount(certify(eval, start, q, policy, "the even-valency product"));
}

TreeCount tau_odd_steps(std::span<const long> steps, long n, const CertificationPolicy& policy) {
  require_steps(steps, n);
  const IntPolynomial p = build_odd_char(steps);
  auto [u_poly, remainder] = divide_by_linear(p - IntPolynomial{1}, BigInt(1));
  if (!remainder.is_zero()) throw TheoremViolation("P(u) - 1 does not vanish at u = 1");
  const IntPolynomial v_poly = p + IntPolynomial{1};
  const BigInt q = step_square_sum(steps);
  const long top = largest(steps);
  const BigInt scale = BigInt(n) << static_cast<mp_bitcnt_t>(2 * (top - 1));
  const auto un = static_cast<std::uint64_t>(n);

  // n 4^(s_k-1) prod (T_n(u_p) - 1) prod (T_n(v_p) + 1) = q * tau. Complex
  // roots come in conjugate pairs, so the product is real up to rounding.
  const Evaluator eval = [&](mpfr_prec_t bits) {
    const mpfr_prec_t wide = bits + kGuardBits;
    BigComplex product(BigFloat(scale, wide), BigFloat(wide));
    const BigComplex one = unit(wide);
    for (const auto& u : roots_or_empty(u_poly, wide)) product *= cheb_eval_large(u, un) - one;
    for (const auto& v : roots_or_empty(v_poly, wide)) product *= cheb_eval_large(v, un) + one;
    return product.real().with_precision(bits);
  };
  const mpfr_prec_t start = policy.initial_bits + headroom_bits({u_poly, v_poly}, n, scale);
  return TreeCount(certify(eval, start, q, policy, "the odd-valency product"));
}

TreeCount tau_even(const CirculantSpec& spec, const CertificationPolicy& policy) {
  require_family(spec, false);
  return tau_even_steps(spec.steps(), spec.order(), policy);
}

TreeCount tau_odd(const CirculantSpec& spec, const CertificationPolicy& policy) {
  require_family(spec, true);
  return tau_odd_steps(spec.steps(), spec.order(), policy);
}

TreeCount tau_formula(const CirculantSpec& spec, const CertificationPolicy& policy) {
  return spec.diagonal() ? tau_odd(spec, policy) : tau_even(spec, policy);
}

TreeCount tau_even_u_form(const CirculantSpec& spec, const CertificationPolicy& policy) {
  require_family(spec, false);
  const IntPolynomial p = build_even_char(spec.steps());
  const long n = spec.order();
  const auto un = static_cast<std::uint64_t>(n);

  // n |prod U_{n-1}(sqrt((w_p + 1)/2))|^2 = tau.
  const Evaluator eval = [&](mpfr_prec_t bits) {
    const mpfr_prec_t wide = bits + kGuardBits;
    BigComplex product = unit(wide);
    const BigFloat half(0.5, wide);
    for (const auto& w : roots_or_empty(p, wide)) {
      const BigComplex x = sqrt((w + unit(wide)) * half);
      product *= cheb_u_eval_large(x, un);
    }
    return (norm(product) * BigFloat(static_cast<long>(n), wide)).with_precision(bits);
  };
  const mpfr_prec_t start = policy.initial_bits + headroom_bits({p}, n, BigInt(1));
  return TreeCount(certify(eval, start, BigInt(1), policy, "the second-kind product"));
}

}  // namespace circulant
