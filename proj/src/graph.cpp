#include "circulant/graph.hpp"

#include "circulant/errors.hpp"
#include "circulant/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

namespace circulant {

long CirculantSpec::degree() const noexcept {
  const long even = 2 * static_cast<long>(steps_.size());
  return diagonal_ ? even + 1 : even;
}

std::string CirculantSpec::to_string() const {
  std::string out = "C" + std::to_string(order_) + "(";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(steps_[i]);
  }
  if (diagonal_) out += ";d";
  out += ')';
  return out;
}

CirculantSpec canonicalize(long order, const std::vector<long>& raw_steps, bool diagonal) {
  if (diagonal ? order < 2 : order < 3) {
    throw SpecError("order too small: " + std::to_string(order) + (diagonal ? " (half-order)" : ""));
  }
  const long vertices = diagonal ? 2 * order : order;
  bool has_diagonal = diagonal;
  std::vector<long> folded;
  folded.reserve(raw_steps.size());

  for (const long raw : raw_steps) {
    long s = raw % vertices;
    if (s < 0) s += vertices;
    if (s == 0) throw SpecError("step " + std::to_string(raw) + " is 0 mod " + std::to_string(vertices));
    s = std::min(s, vertices - s);
    if (2 * s == vertices) {
      if (has_diagonal) throw SpecError("duplicate step " + std::to_string(s) + " (multigraph)");
      has_diagonal = true;
      continue;
    }
    folded.push_back(s);
  }

  std::sort(folded.begin(), folded.end());
  if (std::adjacent_find(folded.begin(), folded.end()) != folded.end()) {
    throw SpecError("duplicate folded steps (multigraph not supported)");
  }
  if (folded.empty()) throw SpecError("empty step set after folding");

  const long stored_order = has_diagonal ? vertices / 2 : vertices;
  return CirculantSpec(stored_order, std::move(folded), has_diagonal);
}

namespace {

long parse_long(std::string_view text, std::string_view literal) {
  long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw SpecError("bad number '" + std::string(text) + "' in spec literal '" + std::string(literal) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

CirculantSpec parse_spec(std::string_view literal) {
  const std::string_view text = trim(literal);
  const auto open = text.find('(');
  if (text.size() < 4 || (text.front() != 'C' && text.front() != 'c') || open == std::string_view::npos ||
      text.back() != ')') {
    throw SpecError("expected C<n>(<s1>,...) but got '" + std::string(literal) + "'");
  }
  const long order = parse_long(text.substr(1, open - 1), literal);
  std::string_view body = text.substr(open + 1, text.size() - open - 2);

  bool diagonal = false;
  if (const auto semi = body.find(';'); semi != std::string_view::npos) {
    if (trim(body.substr(semi + 1)) != "d") {
      throw SpecError("only ';d' may follow the step list in '" + std::string(literal) + "'");
    }
    diagonal = true;
    body = body.substr(0, semi);
  }

  std::vector<long> steps;
  while (true) {
    const auto comma = body.find(',');
    steps.push_back(parse_long(trim(body.substr(0, comma)), literal));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return canonicalize(order, steps, diagonal);
}

long component_count(const CirculantSpec& spec) {
  long g = spec.vertex_count();
  for (const long s : spec.steps()) g = std::gcd(g, s);
  if (spec.diagonal()) g = std::gcd(g, spec.order());
  return g;
}

IntegerMatrix::IntegerMatrix(std::size_t dimension)
    : dimension_(dimension), entries_(dimension * dimension) {}

bool IntegerMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = i + 1; j < dimension_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntegerMatrix IntegerMatrix::minor(std::size_t index) const {
  IntegerMatrix out(dimension_ - 1);
  for (std::size_t i = 0, r = 0; i < dimension_; ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, c = 0; j < dimension_; ++j) {
      if (j == index) continue;
      out(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return out;
}

IntegerMatrix laplacian(const CirculantSpec& spec) {
  const long n = spec.vertex_count();
  IntegerMatrix out(static_cast<std::size_t>(n));
  std::vector<long> offsets;
  for (const long s : spec.steps()) {
    offsets.push_back(s);
    offsets.push_back(n - s);
  }
  if (spec.diagonal()) offsets.push_back(spec.order());

  for (long i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    out(row, row) = spec.degree();
    for (const long off : offsets) out(row, static_cast<std::size_t>((i + off) % n)) -= 1;
  }
  return out;
}

std::vector<double> laplacian_symbol(const CirculantSpec& spec) {
  const long top = spec.diagonal() ? spec.order() : spec.largest_step();
  std::vector<double> coeffs(static_cast<std::size_t>(top) + 1, 0.0);
  coeffs[0] = static_cast<double>(spec.degree());
  for (const long s : spec.steps()) coeffs[static_cast<std::size_t>(s)] -= 2.0;
  if (spec.diagonal()) coeffs[static_cast<std::size_t>(spec.order())] -= 1.0;
  return coeffs;
}

double eigenvalue(const CirculantSpec& spec, long j) {
  const long n = spec.vertex_count();
  const auto coeffs = laplacian_symbol(spec);
  double lambda = coeffs[0];
  for (std::size_t m = 1; m < coeffs.size(); ++m) {
    if (coeffs[m] == 0.0) continue;
    // Reduce j*m mod n first so the angle stays in [0, 2 pi).
    const long phase = static_cast<long>((static_cast<long long>(j) * static_cast<long long>(m)) % n);
    lambda += coeffs[m] * std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(n));
  }
  return lambda;
}

std::vector<double> spectrum(const CirculantSpec& spec) {
  const long n = spec.vertex_count();
  std::vector<double> w(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) {
    w[static_cast<std::size_t>(j)] = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
  }
  const auto coeffs = laplacian_symbol(spec);
  std::vector<double> out(w.size());
  kernels::cosine_series(w, coeffs, out);
  return out;
}

}  // namespace circulant
