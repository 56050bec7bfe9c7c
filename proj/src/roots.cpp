#include "circulant/roots.hpp"

#include "circulant/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>

namespace circulant {

namespace {

constexpr int kNewtonBudget = 200;
constexpr int kAberthBudget = 2000;

std::vector<std::complex<double>> companion_seeds(const IntPolynomial& f) {
  const long d = f.degree();
  const auto& c = f.coefficients();
  const mpq_class lead(c.back());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (long i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (long i = 0; i < d; ++i) {
    const mpq_class ratio = mpq_class(c[static_cast<std::size_t>(i)]) / lead;
    companion(i, d - 1) = -ratio.get_d();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solver failed");
  std::vector<std::complex<double>> seeds;
  seeds.reserve(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i) seeds.push_back(solver.eigenvalues()(i));
  return seeds;
}

BigFloat relative_tolerance(mpfr_prec_t precision, int slack_bits) {
  return exp2_int(-static_cast<long>(precision) + slack_bits, 64);
}

// sum_k |c_k| |z|^k, the scale of the rounding error in evaluating f(z).
BigFloat evaluation_scale(const IntPolynomial& f, const BigFloat& modulus) {
  BigFloat acc(modulus.precision());
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
    acc = acc * modulus + BigFloat(BigInt(abs(*it)), modulus.precision());
  }
  return acc;
}

// The computed |f(z)| can be off by about (deg+1) 2^-p sum |c_k||z|^k.
BigFloat evaluation_noise(const IntPolynomial& f, const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  return evaluation_scale(f, abs(z)) * BigFloat(f.degree() + 1, p) * exp2_int(-static_cast<long>(p) + 4, p);
}

BigFloat inclusion_radius(const IntPolynomial& f, const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  const auto [value, slope] = f.evaluate_with_derivative(z);
  const BigFloat slope_abs = abs(slope);
  if (slope_abs.is_zero()) return BigFloat(std::numeric_limits<double>::infinity(), 64);
  const BigFloat degree(f.degree(), p);
  return (degree * (abs(value) + evaluation_noise(f, z)) / slope_abs).with_precision(64);
}

bool newton_refine(const IntPolynomial& f, BigComplex& z) {
  const BigFloat tol = relative_tolerance(z.precision(), 4);
  const BigFloat one(1L, z.precision());
  int settled = 0;
  for (int iter = 0; iter < kNewtonBudget; ++iter) {
    const auto [value, slope] = f.evaluate_with_derivative(z);
    if (value.real().is_zero() && value.imag().is_zero()) return true;
    if (slope.real().is_zero() && slope.imag().is_zero()) return false;
    const bool at_noise_floor = abs(value) <= evaluation_noise(f, z);
    const BigComplex step = value / slope;
    z -= step;
    if (at_noise_floor) return z.real().is_finite() && z.imag().is_finite();
    if (!z.real().is_finite() || !z.imag().is_finite()) return false;
    if (abs(step) <= tol * max(one, abs(z))) {
      // One extra step after the update becomes negligible.
      if (++settled >= 2) return true;
    }
  }
  return false;
}

bool aberth_refine(const IntPolynomial& f, std::vector<BigComplex>& zs) {
  const mpfr_prec_t p = zs.front().precision();
  const BigFloat tol = relative_tolerance(p, 4);
  const BigFloat one(1L, p);
  const BigComplex unit(BigFloat(1L, p), BigFloat(p));
  for (int iter = 0; iter < kAberthBudget; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const auto [value, slope] = f.evaluate_with_derivative(zs[i]);
      if (value.real().is_zero() && value.imag().is_zero()) continue;
      const bool at_noise_floor = abs(value) <= evaluation_noise(f, zs[i]);
      const BigComplex newton = value / slope;
      BigComplex repulsion(p);
      for (std::size_t j = 0; j < zs.size(); ++j) {
        if (j != i) repulsion += reciprocal(zs[i] - zs[j]);
      }
      const BigComplex step = newton / (unit - newton * repulsion);
      zs[i] -= step;
      if (!zs[i].real().is_finite() || !zs[i].imag().is_finite()) return false;
      if (!at_noise_floor && abs(step) > tol * max(one, abs(zs[i]))) converged = false;
    }
    if (converged) return true;
  }
  return false;
}

bool disjoint(const std::vector<BigComplex>& zs, const std::vector<BigFloat>& radii) {
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!radii[i].is_finite()) return false;
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      if (abs(zs[i] - zs[j]) <= radii[i] + radii[j]) return false;
    }
  }
  return true;
}

std::vector<CertifiedRoot> refine_square_free(const IntPolynomial& f, mpfr_prec_t precision) {
  const long d = f.degree();
  std::vector<CertifiedRoot> out;
  if (d == 1) {
    const BigFloat num(BigInt(-f.coefficient(0)), precision);
    const BigFloat den(f.coefficient(1), precision);
    BigComplex z(num / den, BigFloat(precision));
    BigFloat radius = (abs(z) * relative_tolerance(precision, 1)).with_precision(64);
    out.push_back({std::move(z), std::move(radius), 1});
    return out;
  }

  const auto seeds = companion_seeds(f);
  std::vector<BigComplex> zs;
  zs.reserve(seeds.size());
  bool ok = true;
  for (const auto& seed : seeds) {
    BigComplex z(seed, precision);
    ok = newton_refine(f, z) && ok;
    zs.push_back(std::move(z));
  }

  std::vector<BigFloat> radii;
  auto certify = [&] {
    radii.clear();
    for (const auto& z : zs) radii.push_back(inclusion_radius(f, z));
    return disjoint(zs, radii);
  };

  if (!ok || !certify()) {
    // Newton seeds collided or stalled; restart all roots together, spreading
    // the seeds slightly so coincident ones separate.
    zs.clear();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      const double angle = 2.0 * 3.141592653589793 * (static_cast<double>(i) + 0.25) / static_cast<double>(seeds.size());
      const std::complex<double> nudge = 1e-3 * (1.0 + std::abs(seeds[i])) * std::polar(1.0, angle);
      zs.emplace_back(seeds[i] + nudge, precision);
    }
    if (!aberth_refine(f, zs) || !certify()) {
      throw ConvergenceError("root refinement did not converge at " + std::to_string(precision) + " bits");
    }
  }

  for (std::size_t i = 0; i < zs.size(); ++i) out.push_back({std::move(zs[i]), std::move(radii[i]), 1});
  return out;
}

}  // namespace

CertifiedRoots::CertifiedRoots(std::vector<CertifiedRoot> roots, mpfr_prec_t working_precision)
    : roots_(std::move(roots)), precision_(working_precision) {}

long CertifiedRoots::count() const noexcept {
  long total = 0;
  for (const auto& r : roots_) total += r.multiplicity;
  return total;
}

std::vector<BigComplex> CertifiedRoots::expanded() const {
  std::vector<BigComplex> out;
  for (const auto& r : roots_) {
    for (int m = 0; m < r.multiplicity; ++m) out.push_back(r.value);
  }
  return out;
}

CertifiedRoots find_roots(const IntPolynomial& p, mpfr_prec_t precision) {
  if (p.degree() < 1) throw std::domain_error("find_roots needs a nonconstant polynomial");
  std::vector<CertifiedRoot> all;
  for (const auto& [factor, multiplicity] : square_free_decomposition(p)) {
    for (auto& root : refine_square_free(factor, precision)) {
      root.multiplicity = multiplicity;
      all.push_back(std::move(root));
    }
  }
  return CertifiedRoots(std::move(all), precision);
}

}  // namespace circulant
