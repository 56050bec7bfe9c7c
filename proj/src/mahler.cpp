#include "circulant/mahler.hpp"

#include "circulant/chebyshev.hpp"
#include "circulant/closed_form.hpp"
#include "circulant/errors.hpp"
#include "circulant/kernels.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace circulant {

namespace {

std::map<long, BigInt> symbol_map(std::span<const long> steps, long constant_shift) {
  std::map<long, BigInt> out;
  out[0] = BigInt(2 * static_cast<long>(steps.size()) + constant_shift);
  for (const long s : steps) {
    out[s] -= 1;
    out[-s] -= 1;
  }
  return out;
}

std::map<long, BigInt> multiply(const std::map<long, BigInt>& a, const std::map<long, BigInt>& b) {
  std::map<long, BigInt> out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntPolynomial to_ordinary(const std::map<long, BigInt>& laurent) {
  const long shift = -laurent.begin()->first;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(laurent.rbegin()->first + shift + 1));
  for (const auto& [e, c] : laurent) coeffs[static_cast<std::size_t>(e + shift)] = c;
  return IntPolynomial(std::move(coeffs));
}

CertifiedRoots roots_of(const IntPolynomial& p, mpfr_prec_t precision) {
  if (p.degree() < 1) return CertifiedRoots({}, precision);
  return find_roots(p, precision);
}

double log_of(const BigInt& value) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

bool strictly_increasing_positive(std::span<const long> steps) {
  if (steps.empty() || steps.front() <= 0) return false;
  return std::adjacent_find(steps.begin(), steps.end(), std::greater_equal<>()) == steps.end();
}

long gcd_of(std::span<const long> steps) {
  long g = 0;
  for (const long s : steps) g = std::gcd(g, s);
  return g;
}

}  // namespace

LaurentSpectrum::LaurentSpectrum(Family family, std::vector<long> steps, std::vector<long> reduced, long gcd,
                                 std::map<long, BigInt> laurent, IntPolynomial ordinary, IntPolynomial off_circle,
                                 CertifiedRoots roots)
    : family_(family),
      steps_(std::move(steps)),
      reduced_(std::move(reduced)),
      gcd_(gcd),
      laurent_(std::move(laurent)),
      ordinary_(std::move(ordinary)),
      off_circle_(std::move(off_circle)),
      roots_(std::move(roots)) {}

std::vector<CertifiedRoot> LaurentSpectrum::outside_roots() const {
  std::vector<CertifiedRoot> out;
  for (const auto& r : roots_.roots()) {
    if (abs(r.value) > BigFloat(1L, r.value.precision())) out.push_back(r);
  }
  return out;
}

void LaurentSpectrum::evaluate_on_circle(std::span<const double> w, std::span<double> out) const {
  std::vector<double> coeffs(static_cast<std::size_t>(laurent_.rbegin()->first) + 1, 0.0);
  for (const auto& [e, c] : laurent_) {
    if (e == 0) coeffs[0] = c.get_d();
    if (e > 0) coeffs[static_cast<std::size_t>(e)] = 2.0 * c.get_d();
  }
  kernels::cosine_series(w, coeffs, out);
}

void LaurentSpectrum::evaluate_off_circle(std::span<const double> w, std::span<double> out) const {
  const long half = off_circle_.degree() / 2;
  std::vector<double> coeffs(static_cast<std::size_t>(half) + 1, 0.0);
  for (long m = 0; m <= half; ++m) {
    const double c = off_circle_.coefficient(static_cast<std::size_t>(half + m)).get_d();
    coeffs[static_cast<std::size_t>(m)] = m == 0 ? c : 2.0 * c;
  }
  kernels::cosine_series(w, coeffs, out);
}

LaurentSpectrum associated_laurent(std::span<const long> steps, Family family, mpfr_prec_t precision) {
  if (!strictly_increasing_positive(steps)) {
    throw std::invalid_argument("steps must be positive and strictly increasing");
  }
  const long d = gcd_of(steps);
  std::vector<long> reduced(steps.begin(), steps.end());
  for (auto& s : reduced) s /= d;

  auto laurent = symbol_map(reduced, 0);
  if (family == Family::kDiagonal) laurent = multiply(laurent, symbol_map(reduced, 2));
  IntPolynomial ordinary = to_ordinary(laurent);

  // z = 1 is a double root of L and not a root of L + 2.
  IntPolynomial off_circle = divide_exact(ordinary, IntPolynomial{1, -2, 1});
  if (off_circle.evaluate(BigInt(1)) == 0) {
    throw TheoremViolation("z = 1 has multiplicity above 2 for reduced steps");
  }
  CertifiedRoots roots = roots_of(off_circle, precision);
  return LaurentSpectrum(family, std::vector<long>(steps.begin(), steps.end()), std::move(reduced), d,
                         std::move(laurent), std::move(ordinary), std::move(off_circle), std::move(roots));
}

LaurentSpectrum with_roots(const LaurentSpectrum& s, mpfr_prec_t precision) {
  return LaurentSpectrum(s.family_, s.steps_, s.reduced_, s.gcd_, s.laurent_, s.ordinary_, s.off_circle_,
                         roots_of(s.off_circle_, precision));
}

std::string_view method_name(MahlerMethod method) noexcept {
  return method == MahlerMethod::kRootProduct ? "root-product" : "quadrature";
}

MahlerEstimate mahler_root_product(const LaurentSpectrum& spectrum, mpfr_prec_t max_bits) {
  LaurentSpectrum current = spectrum;
  while (true) {
    const mpfr_prec_t p = current.roots().working_precision();
    const BigFloat one(1L, p);
    bool straddles = false;
    for (const auto& r : current.roots().roots()) {
      if (abs(abs(r.value) - one) <= r.radius) straddles = true;
    }
    if (!straddles) {
      BigFloat product = abs(BigFloat(current.ordinary().leading(), p));
      BigFloat relative = exp2_int(-static_cast<long>(p) + 8, 64);
      for (const auto& r : current.outside_roots()) {
        const BigFloat modulus = abs(r.value);
        for (int m = 0; m < r.multiplicity; ++m) {
          product *= modulus;
          relative += r.radius / modulus;
        }
      }
      MahlerEstimate out;
      out.value = product.to_double();
      // The reported double carries its own rounding.
      out.error_bound = (product * relative).to_double() + out.value * std::ldexp(1.0, -51);
      out.method = MahlerMethod::kRootProduct;
      out.small_measure = log(product).to_double();
      return out;
    }
    if (2 * p > max_bits) {
      throw ConvergenceError("a root stays within its error disk of the unit circle at " + std::to_string(p) + " bits");
    }
    current = with_roots(current, 2 * p);
  }
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre P_n(x) and its derivative by the three-term recurrence.
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

MahlerEstimate mahler_quadrature(const LaurentSpectrum& spectrum, const QuadratureOptions& options) {
  std::vector<double> gl_nodes;
  std::vector<double> gl_weights;
  gauss_legendre(options.order, gl_nodes, gl_weights);

  // log|F| = log(4 sin^2(pi t)) + log|off-circle factor|; the first term
  // integrates to zero, the second is smooth and even about t = 0 and t = 1/2,
  // so integrate it over [0, 1/2] and double.
  auto level = [&](int panels) {
    const double width = 0.5 / panels;
    std::vector<double> w;
    std::vector<double> weights;
    w.reserve(static_cast<std::size_t>(panels * options.order));
    weights.reserve(w.capacity());
    for (int k = 0; k < panels; ++k) {
      for (int i = 0; i < options.order; ++i) {
        const double t = width * (k + 0.5 * (gl_nodes[static_cast<std::size_t>(i)] + 1.0));
        w.push_back(std::cos(2.0 * std::numbers::pi * t));
        weights.push_back(0.5 * width * gl_weights[static_cast<std::size_t>(i)]);
      }
    }
    std::vector<double> values(w.size());
    spectrum.evaluate_off_circle(w, values);
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += weights[i] * std::log(std::abs(values[i]));
    return 2.0 * sum;
  };

  double previous = level(options.initial_panels);
  double estimate = std::numeric_limits<double>::infinity();
  double current = previous;
  for (int panels = 2 * options.initial_panels; panels <= options.max_panels; panels *= 2) {
    current = level(panels);
    estimate = std::abs(current - previous);
    if (estimate < options.target) break;
    previous = current;
  }
  if (!(estimate <= options.tolerance)) {
    throw ConvergenceError("Mahler quadrature error estimate " + std::to_string(estimate) + " exceeds tolerance");
  }
  // log 4 sin^2(pi t) integrates to zero over [0, 1].
  MahlerEstimate out;
  out.small_measure = current;
  out.value = std::exp(out.small_measure);
  out.error_bound = out.value * (estimate + 1e-14 * (1.0 + std::abs(out.small_measure)));
  out.method = MahlerMethod::kQuadrature;
  return out;
}

bool admissible(std::span<const long> steps, Family family, long n) {
  if (!strictly_increasing_positive(steps)) return false;
  const long top = steps.back();
  if (family == Family::kEven ? (n < 3 || 2 * top >= n) : (n < 2 || top >= n)) return false;
  return std::gcd(gcd_of(steps), n) == 1;
}

AsymptoticPoint asymptotic_ratio(std::span<const long> steps, Family family, long n, const MahlerEstimate& measure) {
  if (!strictly_increasing_positive(steps)) throw std::invalid_argument("steps must be positive and increasing");
  if (const long g = std::gcd(gcd_of(steps), n); g != 1) {
    throw DisconnectedError("n = " + std::to_string(n) + " shares the factor " + std::to_string(g) + " with the steps", g);
  }
  if (!admissible(steps, family, n)) {
    throw std::invalid_argument("steps are not canonical at n = " + std::to_string(n));
  }
  const CirculantSpec spec = canonicalize(n, std::vector<long>(steps.begin(), steps.end()), family == Family::kDiagonal);
  AsymptoticPoint out;
  out.n = n;
  out.tau = tau_formula(spec);

  const long d = gcd_of(steps);
  const double q = static_cast<double>(step_square_sum(steps));
  double log_ratio = log_of(out.tau.value()) + std::log(q) - std::log(static_cast<double>(n)) -
                     2.0 * std::log(static_cast<double>(d)) - static_cast<double>(n) * measure.small_measure;
  if (family == Family::kDiagonal) log_ratio += std::numbers::ln2;
  out.ratio = std::exp(log_ratio);
  return out;
}

AsymptoticPoint asymptotic_ratio(std::span<const long> steps, Family family, long n) {
  return asymptotic_ratio(steps, family, n, mahler_root_product(associated_laurent(steps, family)));
}

std::vector<ThermoPoint> thermo_limit(std::span<const long> steps, Family family, long first, long last) {
  const MahlerEstimate measure = mahler_root_product(associated_laurent(steps, family));
  std::vector<ThermoPoint> out;
  for (long n = first; n <= last; ++n) {
    if (!admissible(steps, family, n)) continue;
    const CirculantSpec spec = canonicalize(n, std::vector<long>(steps.begin(), steps.end()), family == Family::kDiagonal);
    const TreeCount tau = tau_formula(spec);
    out.push_back({n, log_of(tau.value()) / static_cast<double>(n), measure.small_measure});
  }
  return out;
}

}  // namespace circulant
