#pragma once

// Mahler measures of L(z) = 2k - sum (z^s + z^-s) and R(z) = L(z)(L(z) + 2),
// and the asymptotic laws they govern:
//   even family:     tau(n) ~ (n d^2 / q) M(L)^n
//   diagonal family: tau(n) ~ (n d^2 / (2q)) M(R)^n
// with d = gcd of the steps and q = sum of squared steps.

#include "circulant/arithmetic.hpp"
#include "circulant/polynomial.hpp"
#include "circulant/roots.hpp"

#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace circulant {

class LaurentSpectrum {
 public:
  Family family() const noexcept { return family_; }
  /// Steps as requested.
  const std::vector<long>& steps() const noexcept { return steps_; }
  /// Steps divided by their gcd; the spectrum is built on these.
  const std::vector<long>& reduced_steps() const noexcept { return reduced_; }
  long step_gcd() const noexcept { return gcd_; }
  /// Exponent -> coefficient of L (even) or R (diagonal), reduced steps.
  const std::map<long, BigInt>& laurent() const noexcept { return laurent_; }
  /// z^e times the Laurent polynomial, e its most negative exponent negated.
  const IntPolynomial& ordinary() const noexcept { return ordinary_; }
  /// ordinary() / (z - 1)^2; has no roots on the unit circle.
  const IntPolynomial& off_circle_factor() const noexcept { return off_circle_; }
  const CertifiedRoots& roots() const noexcept { return roots_; }
  /// Roots of off_circle_factor() with |z| > 1, each with its multiplicity.
  std::vector<CertifiedRoot> outside_roots() const;

  /// The Laurent polynomial at z = e^{i theta} for a batch of w = cos(theta),
  /// via the cosine-series kernel. Real since the polynomial is palindromic.
  void evaluate_on_circle(std::span<const double> w, std::span<double> out) const;
  /// Same for off_circle_factor() / z^(deg/2), which equals the Laurent
  /// polynomial divided by (z - 2 + 1/z) = -4 sin^2(theta/2).
  void evaluate_off_circle(std::span<const double> w, std::span<double> out) const;

 private:
  friend LaurentSpectrum associated_laurent(std::span<const long>, Family, mpfr_prec_t);
  friend LaurentSpectrum with_roots(const LaurentSpectrum&, mpfr_prec_t);
  LaurentSpectrum(Family family, std::vector<long> steps, std::vector<long> reduced, long gcd,
                  std::map<long, BigInt> laurent, IntPolynomial ordinary, IntPolynomial off_circle,
                  CertifiedRoots roots);

  Family family_;
  std::vector<long> steps_;
  std::vector<long> reduced_;
  long gcd_;
  std::map<long, BigInt> laurent_;
  IntPolynomial ordinary_;
  IntPolynomial off_circle_;
  CertifiedRoots roots_;
};

/// Builds L (even) or R (diagonal) on steps / gcd(steps), splits off the
/// double root at z = 1 exactly, and finds the remaining roots at `precision`.
/// Throws TheoremViolation if z = 1 is not a root of multiplicity exactly 2.
LaurentSpectrum associated_laurent(std::span<const long> steps, Family family, mpfr_prec_t precision = 256);

/// Same spectrum with roots recomputed at another precision.
LaurentSpectrum with_roots(const LaurentSpectrum& spectrum, mpfr_prec_t precision);

enum class MahlerMethod { kRootProduct, kQuadrature };
std::string_view method_name(MahlerMethod method) noexcept;

struct MahlerEstimate {
  double value = 1.0;
  double error_bound = 0.0;
  MahlerMethod method = MahlerMethod::kRootProduct;
  /// log of the measure.
  double small_measure = 0.0;
};

/// |leading coefficient| times the product of root moduli above 1. Precision
/// doubles (up to max_bits) while a root disk still meets the unit circle.
/// Throws ConvergenceError if one does at max_bits.
MahlerEstimate mahler_root_product(const LaurentSpectrum& spectrum, mpfr_prec_t max_bits = 8192);

struct QuadratureOptions {
  /// Gauss-Legendre nodes per panel.
  int order = 20;
  int initial_panels = 4;
  int max_panels = 1 << 14;
  /// Stop once successive levels agree this closely (absolute, on log M).
  double target = 1e-13;
  /// Error estimate above this at max_panels is an error.
  double tolerance = 1e-9;
};

/// exp of the integral over [0,1] of log|P(e^{2 pi i t})|, with the factor
/// |e^{2 pi i t} - 1|^2 of the double root at 1 divided out analytically
/// (its log integrates to zero). Composite Gauss-Legendre with panel doubling;
/// the error estimate is the change between the last two levels.
/// Throws ConvergenceError if the estimate exceeds options.tolerance.
MahlerEstimate mahler_quadrature(const LaurentSpectrum& spectrum, const QuadratureOptions& options = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct AsymptoticPoint {
  long n = 0;
  TreeCount tau;
  /// tau q / (n d^2 A^n), or tau 2q / (n d^2 K^n) for the diagonal family.
  double ratio = 0.0;
};

/// Throws DisconnectedError if gcd(steps, n) > 1 and std::invalid_argument
/// if the steps are not canonical at this n (s_k < n/2, or s_k < n for the
/// diagonal family).
AsymptoticPoint asymptotic_ratio(std::span<const long> steps, Family family, long n, const MahlerEstimate& measure);
AsymptoticPoint asymptotic_ratio(std::span<const long> steps, Family family, long n);

struct ThermoPoint {
  long n = 0;
  /// log(tau(n)) / n.
  double entropy = 0.0;
  /// m(L) or m(R), the limit.
  double target = 0.0;
};

/// log tau(n) / n over [first, last], skipping n that give a disconnected or
/// non-canonical graph.
std::vector<ThermoPoint> thermo_limit(std::span<const long> steps, Family family, long first, long last);

/// Whether (steps, family, n) describes a connected canonical graph.
bool admissible(std::span<const long> steps, Family family, long n);

}  // namespace circulant
