#include "cli.hpp"

#include "circulant/arithmetic.hpp"
#include "circulant/closed_form.hpp"
#include "circulant/errors.hpp"
#include "circulant/exact.hpp"
#include "circulant/graph.hpp"
#include "circulant/mahler.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace circulant::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Record {
  std::optional<std::string> spec;
  std::optional<long> n;
  std::optional<Family> family;
  std::optional<std::string> tau;
  std::optional<long> coefficient;
  std::optional<std::string> a;
  std::optional<double> mahler;
  std::optional<double> mahler_error;
  std::optional<double> log_mahler;
  std::optional<double> ratio;
  std::optional<std::string> method;
  std::optional<std::string> check;
  std::optional<std::string> status;
  std::optional<std::string> message;
  std::optional<double> elapsed_ms;
};

const std::vector<std::string> kColumns{"spec",   "n",          "family", "tau",   "coefficient",
                                        "a",      "mahler",     "mahler_error", "log_mahler", "ratio",
                                        "method", "check",      "status", "message", "timings"};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Json to_json(const Record& r, bool timings) {
  Json j;
  auto put = [&](const char* key, const auto& field) {
    if (field) {
      j[key] = *field;
    } else {
      j[key] = nullptr;
    }
  };
  put("spec", r.spec);
  put("n", r.n);
  j["family"] = r.family ? Json(std::string(family_name(*r.family))) : Json(nullptr);
  put("tau", r.tau);
  put("coefficient", r.coefficient);
  put("a", r.a);
  put("mahler", r.mahler);
  put("mahler_error", r.mahler_error);
  put("log_mahler", r.log_mahler);
  put("ratio", r.ratio);
  put("method", r.method);
  put("check", r.check);
  put("status", r.status);
  put("message", r.message);
  if (timings && r.elapsed_ms) {
    j["timings"] = Json{{"ms", *r.elapsed_ms}};
  } else {
    j["timings"] = nullptr;
  }
  return j;
}

// Flat text cells, empty for null.
std::vector<std::string> cells(const Record& r, bool timings) {
  const Json j = to_json(r, timings);
  std::vector<std::string> out;
  for (const auto& key : kColumns) {
    const Json& v = j[key];
    if (v.is_null()) {
      out.emplace_back();
    } else if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_float()) {
      out.push_back(format_double(v.get<double>()));
    } else if (v.is_object()) {
      out.push_back(format_double(v["ms"].get<double>()));
    } else {
      out.push_back(v.dump());
    }
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const std::vector<Record>& rows, const std::string& format, bool timings, std::ostream& os) {
  if (format == "json") {
    for (const auto& r : rows) os << to_json(r, timings).dump() << '\n';
    return;
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) table.push_back(cells(r, timings));
  if (format == "csv") {
    for (std::size_t c = 0; c < kColumns.size(); ++c) os << (c ? "," : "") << kColumns[c];
    os << '\n';
    for (const auto& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_escape(row[c]);
      os << '\n';
    }
    return;
  }
  // table: only columns that carry a value somewhere
  std::vector<std::size_t> shown;
  std::vector<std::size_t> width;
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    std::size_t w = 0;
    bool used = false;
    for (const auto& row : table) {
      used = used || !row[c].empty();
      w = std::max(w, row[c].size());
    }
    if (used) {
      shown.push_back(c);
      width.push_back(std::max(w, kColumns[c].size()));
    }
  }
  auto line = [&](auto&& text) {
    for (std::size_t i = 0; i < shown.size(); ++i) {
      os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << text(shown[i]);
    }
    os << '\n';
  };
  line([&](std::size_t c) { return kColumns[c]; });
  for (const auto& row : table) line([&](std::size_t c) { return row[c]; });
}

// ---- argument parsing -----------------------------------------------------

long to_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

std::vector<long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(to_long(item, what));
  }
  if (out.empty()) throw UsageError("empty " + what + " list");
  return out;
}

struct Range {
  long first = 0;
  long last = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = to_long(text, "range");
    return {v, v};
  }
  Range r{to_long(text.substr(0, dots), "range start"), to_long(text.substr(dots + 2), "range end")};
  if (r.first > r.last) throw UsageError("empty range '" + text + "'");
  return r;
}

std::vector<long> sorted_steps(std::vector<long> steps) {
  std::sort(steps.begin(), steps.end());
  if (steps.front() <= 0 || std::adjacent_find(steps.begin(), steps.end()) != steps.end()) {
    throw UsageError("steps must be distinct positive integers");
  }
  return steps;
}

// "C*(1,2)" or "C*(1,2;d)": steps fixed, n swept.
struct Pattern {
  std::vector<long> steps;
  Family family = Family::kEven;
};

std::optional<Pattern> parse_pattern(const std::string& text) {
  if (text.rfind("C*(", 0) != 0) return std::nullopt;
  if (text.back() != ')') throw UsageError("malformed pattern '" + text + "'");
  std::string body = text.substr(3, text.size() - 4);
  Pattern p;
  if (const auto semi = body.find(';'); semi != std::string::npos) {
    if (body.substr(semi + 1) != "d") throw UsageError("malformed pattern '" + text + "'");
    p.family = Family::kDiagonal;
    body = body.substr(0, semi);
  }
  p.steps = sorted_steps(parse_list(body, "step"));
  return p;
}

// Steps that stay as written (no folding) at this n.
bool canonical_at(const std::vector<long>& steps, Family family, long n) {
  const long top = steps.back();
  return family == Family::kEven ? (n >= 3 && 2 * top < n) : (n >= 2 && top < n);
}

CirculantSpec spec_at(const Pattern& p, long n) { return canonicalize(n, p.steps, p.family == Family::kDiagonal); }

Family family_of(const CirculantSpec& spec) { return spec.diagonal() ? Family::kDiagonal : Family::kEven; }

// Specs named by a literal, or by a pattern swept over --n.
std::vector<CirculantSpec> resolve_specs(const std::string& target, const std::optional<std::string>& n_range) {
  if (auto pattern = parse_pattern(target)) {
    if (!n_range) throw UsageError("pattern '" + target + "' needs --n a..b");
    const Range r = parse_range(*n_range);
    std::vector<CirculantSpec> out;
    for (long n = r.first; n <= r.last; ++n) {
      if (canonical_at(pattern->steps, pattern->family, n)) out.push_back(spec_at(*pattern, n));
    }
    if (out.empty()) throw UsageError("no n in " + *n_range + " keeps the steps of '" + target + "' canonical");
    return out;
  }
  if (n_range) throw UsageError("--n only applies to C*(...) patterns");
  return {parse_spec(target)};
}

// ---- evaluation -----------------------------------------------------------

// Runs fn(i) for i in [0, count) on worker threads and returns results in
// index order. The first exception in index order is rethrown.
template <typename T>
std::vector<T> ordered_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Record base_record(const CirculantSpec& spec) {
  Record r;
  r.spec = spec.to_string();
  r.n = spec.order();
  r.family = family_of(spec);
  return r;
}

struct Outcome {
  std::vector<Record> rows;
  int code = kOk;
  std::string diagnostic;
};

void merge(Outcome& into, Outcome&& part) {
  for (auto& r : part.rows) into.rows.push_back(std::move(r));
  if (into.code == kOk && part.code != kOk) {
    into.code = part.code;
    into.diagnostic = std::move(part.diagnostic);
  }
}

Outcome disconnected_outcome(const CirculantSpec& spec) {
  Outcome o;
  Record r = base_record(spec);
  r.tau = "0";
  r.status = "disconnected";
  r.message = std::to_string(component_count(spec)) + " components";
  o.rows.push_back(std::move(r));
  o.code = kDisconnected;
  o.diagnostic = spec.to_string() + " is disconnected";
  return o;
}

Outcome tau_one(const CirculantSpec& spec, const std::string& method, const OracleConfig& oracle,
                const CertificationPolicy& policy) {
  if (!is_connected(spec)) return disconnected_outcome(spec);
  Outcome o;
  std::optional<TreeCount> formula;
  std::optional<TreeCount> exact;
  if (method == "formula" || method == "both") {
    const auto start = std::chrono::steady_clock::now();
    formula = tau_formula(spec, policy);
    Record r = base_record(spec);
    r.tau = formula->to_string();
    r.method = "formula";
    r.status = "ok";
    r.elapsed_ms = elapsed_since(start);
    o.rows.push_back(std::move(r));
  }
  if (method == "oracle" || method == "both") {
    const auto start = std::chrono::steady_clock::now();
    exact = tau_oracle(spec, oracle);
    Record r = base_record(spec);
    r.tau = exact->to_string();
    r.method = "oracle";
    r.status = "ok";
    r.elapsed_ms = elapsed_since(start);
    o.rows.push_back(std::move(r));
  }
  if (formula && exact && *formula != *exact) {
    for (auto& r : o.rows) r.status = "fail";
    o.code = kVerificationFailed;
    o.diagnostic = spec.to_string() + ": formula " + formula->to_string() + " != oracle " + exact->to_string();
  }
  return o;
}

Outcome decompose_one(const CirculantSpec& spec, const CertificationPolicy& policy) {
  if (!is_connected(spec)) return disconnected_outcome(spec);
  const auto start = std::chrono::steady_clock::now();
  const Decomposition d = decompose(spec, tau_formula(spec, policy));
  Record r = base_record(spec);
  r.tau = d.tau.to_string();
  r.coefficient = d.coefficient;
  r.a = d.a.get_str();
  r.method = "formula";
  r.status = "ok";
  r.elapsed_ms = elapsed_since(start);
  return Outcome{{std::move(r)}, kOk, {}};
}

Outcome sweep(const std::vector<CirculantSpec>& specs, const std::function<Outcome(const CirculantSpec&)>& fn) {
  auto parts = ordered_map<Outcome>(specs.size(), [&](std::size_t i) { return fn(specs[i]); });
  Outcome all;
  for (auto& part : parts) {
    // Disconnected members of a sweep are reported, not fatal.
    if (specs.size() > 1 && part.code == kDisconnected) part.code = kOk;
    merge(all, std::move(part));
  }
  return all;
}

Record check_row(const CirculantSpec& spec, std::string check, bool pass, std::string message = {}) {
  Record r = base_record(spec);
  r.check = std::move(check);
  r.status = pass ? "pass" : "fail";
  if (!message.empty()) r.message = std::move(message);
  return r;
}

// Smallest multiplier m > 1 coprime to N that maps the steps to a different
// canonical step set; the conjugate graph must have the same tree count.
std::optional<CirculantSpec> conjugate(const CirculantSpec& spec) {
  const long n_vertices = spec.vertex_count();
  for (long m = 2; m < n_vertices; ++m) {
    if (std::gcd(m, n_vertices) != 1) continue;
    std::vector<long> scaled;
    for (const long s : spec.steps()) scaled.push_back((s * m) % n_vertices);
    const CirculantSpec image = canonicalize(spec.order(), scaled, spec.diagonal());
    if (image != spec) return image;
  }
  return std::nullopt;
}

Outcome verify_one(const CirculantSpec& spec, const OracleConfig& oracle, const CertificationPolicy& policy) {
  Outcome o;
  auto fail = [&](const std::string& what) {
    if (o.code == kOk) {
      o.code = kVerificationFailed;
      o.diagnostic = spec.to_string() + ": " + what;
    }
  };
  const TreeCount formula = tau_formula(spec, policy);

  if (spec.vertex_count() <= oracle.vertex_ceiling) {
    const TreeCount exact = tau_oracle(spec, oracle);
    const bool ok = exact == formula;
    Record r = check_row(spec, "formula-vs-oracle", ok);
    r.tau = formula.to_string();
    if (!ok) {
      r.message = "oracle " + exact.to_string();
      fail("formula " + formula.to_string() + " != oracle " + exact.to_string());
    }
    o.rows.push_back(std::move(r));
  } else {
    Record r = base_record(spec);
    r.check = "formula-vs-oracle";
    r.status = "skipped";
    r.message = "above oracle ceiling";
    o.rows.push_back(std::move(r));
  }

  try {
    const Decomposition d = decompose(spec, formula);
    Record r = check_row(spec, "decomposition", true);
    r.tau = formula.to_string();
    r.coefficient = d.coefficient;
    r.a = d.a.get_str();
    o.rows.push_back(std::move(r));
  } catch (const TheoremViolation& e) {
    o.rows.push_back(check_row(spec, "decomposition", false, e.what()));
    fail(e.what());
  }

  if (const auto image = conjugate(spec)) {
    const TreeCount other = tau_formula(*image, policy);
    const bool ok = other == formula;
    o.rows.push_back(check_row(spec, "conjugacy", ok, "conjugate " + image->to_string()));
    if (!ok) fail("conjugate " + image->to_string() + " has tau " + other.to_string());
  }
  return o;
}

Outcome verify_iso_pair(const OracleConfig& oracle) {
  const CirculantSpec first = parse_spec("C16(1,2,7)");
  const CirculantSpec second = parse_spec("C16(2,3,5)");
  Outcome o;
  const TreeCount a = tau_oracle(first, oracle);
  const TreeCount b = tau_oracle(second, oracle);
  for (const auto& [spec, tau] : {std::pair{first, a}, std::pair{second, b}}) {
    Record r = base_record(spec);
    r.tau = tau.to_string();
    r.method = "oracle";
    r.status = "ok";
    o.rows.push_back(std::move(r));
  }
  Record r = check_row(first, "isomorphic-pair", a == b, "partner " + second.to_string());
  r.tau = a.to_string();
  o.rows.push_back(std::move(r));
  if (a != b) {
    o.code = kVerificationFailed;
    o.diagnostic = "tau(C16(1,2,7)) = " + a.to_string() + " but tau(C16(2,3,5)) = " + b.to_string();
  }
  return o;
}

Record mahler_row(const std::vector<long>& steps, Family family, const MahlerEstimate& m) {
  Record r;
  std::string s;
  for (const long v : steps) s += (s.empty() ? "" : ",") + std::to_string(v);
  r.spec = "C*(" + s + (family == Family::kDiagonal ? ";d)" : ")");
  r.family = family;
  r.mahler = m.value;
  r.mahler_error = m.error_bound;
  r.log_mahler = m.small_measure;
  r.method = std::string(method_name(m.method));
  r.status = "ok";
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning-tree counts of circulant graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  bool timings = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", out_path, "Write rows to FILE instead of stdout");
  app.add_flag("--timings", timings, "Include per-row wall time");

  std::string target;
  std::optional<std::string> n_range;
  std::string method = "formula";
  std::string steps_text;
  std::string family_text = "even";
  long oracle_ceiling = 0;
  long n_max = 0;
  long n_min = 0;
  std::string mahler_method = "root-product";
  std::string recursion_text;
  CertificationPolicy policy;

  auto* tau = app.add_subcommand("tau", "Spanning-tree count of a spec or a C*(...) sweep");
  tau->add_option("spec", target, "C<n>(s1,...[;d]) or C*(s1,...[;d])")->required();
  tau->add_option("--n", n_range, "n or a..b for patterns");
  tau->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle", "both"}));
  tau->add_option("--oracle-ceiling", oracle_ceiling, "Largest vertex count for the oracle");
  tau->add_option("--max-bits", policy.max_bits, "Precision ceiling for certifying the closed form")
      ->check(CLI::Range(64, 1 << 20));

  auto* oracle_cmd = app.add_subcommand("oracle", "Matrix-tree determinant only");
  oracle_cmd->add_option("spec", target)->required();
  oracle_cmd->add_option("--n", n_range);
  oracle_cmd->add_option("--oracle-ceiling", oracle_ceiling);

  auto* verify = app.add_subcommand("verify", "Formula, decomposition and conjugacy checks over a sweep");
  verify->add_option("target", target, "C*(...) pattern, a literal spec, or C16-iso-pair")->required();
  verify->add_option("--n-max", n_max, "Largest n of the sweep");
  verify->add_option("--n-min", n_min, "Smallest n of the sweep");
  verify->add_option("--oracle-ceiling", oracle_ceiling);
  verify->add_option("--max-bits", policy.max_bits)->check(CLI::Range(64, 1 << 20));

  auto* mahler = app.add_subcommand("mahler", "Mahler measure of the associated Laurent polynomial");
  mahler->add_option("steps", steps_text, "s1,s2,...")->required();
  mahler->add_option("--family", family_text)->check(CLI::IsMember({"even", "diagonal"}));
  mahler->add_option("--method", mahler_method)->check(CLI::IsMember({"root-product", "quadrature", "both"}));

  auto* asymptote = app.add_subcommand("asymptote", "tau(n) against its asymptotic law");
  asymptote->add_option("steps", steps_text)->required();
  asymptote->add_option("--family", family_text)->check(CLI::IsMember({"even", "diagonal"}));
  asymptote->add_option("--n", n_range, "a..b")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "tau = c n a^2");
  decompose_cmd->add_option("spec", target)->required();
  decompose_cmd->add_option("--n", n_range);
  decompose_cmd->add_option("--max-bits", policy.max_bits)->check(CLI::Range(64, 1 << 20));

  auto* sequence = app.add_subcommand("sequence", "a(n) for a step family");
  sequence->add_option("steps", steps_text)->required();
  sequence->add_option("--family", family_text)->check(CLI::IsMember({"even", "diagonal"}));
  sequence->add_option("--n", n_range, "a..b")->required();
  sequence->add_option("--check-recursion", recursion_text, "c1,c2,...: a(n) = sum c_j a(n-j)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  OracleConfig oracle = OracleConfig::from_environment();
  if (oracle_ceiling > 0) oracle.vertex_ceiling = oracle_ceiling;

  Outcome result;
  try {
    if (*tau || *oracle_cmd) {
      const std::string how = *oracle_cmd ? "oracle" : method;
      result = sweep(resolve_specs(target, n_range), [&](const CirculantSpec& s) { return tau_one(s, how, oracle, policy); });
    } else if (*decompose_cmd) {
      result = sweep(resolve_specs(target, n_range), [&](const CirculantSpec& s) { return decompose_one(s, policy); });
    } else if (*verify) {
      if (target == "C16-iso-pair") {
        result = verify_iso_pair(oracle);
      } else if (auto pattern = parse_pattern(target)) {
        if (n_max <= 0) throw UsageError("verify of a pattern needs --n-max");
        std::vector<CirculantSpec> specs;
        for (long n = std::max(n_min, 2L); n <= n_max; ++n) {
          if (admissible(pattern->steps, pattern->family, n)) specs.push_back(spec_at(*pattern, n));
        }
        if (specs.empty()) throw UsageError("no connected canonical n up to " + std::to_string(n_max));
        result = sweep(specs, [&](const CirculantSpec& s) { return verify_one(s, oracle, policy); });
      } else {
        const CirculantSpec spec = parse_spec(target);
        result = is_connected(spec) ? verify_one(spec, oracle, policy) : disconnected_outcome(spec);
      }
    } else if (*mahler) {
      const auto steps = sorted_steps(parse_list(steps_text, "step"));
      const Family family = parse_family(family_text);
      const LaurentSpectrum spectrum = associated_laurent(steps, family);
      if (mahler_method != "quadrature") result.rows.push_back(mahler_row(steps, family, mahler_root_product(spectrum)));
      if (mahler_method != "root-product") result.rows.push_back(mahler_row(steps, family, mahler_quadrature(spectrum)));
    } else if (*asymptote) {
      const auto steps = sorted_steps(parse_list(steps_text, "step"));
      const Family family = parse_family(family_text);
      const Range r = parse_range(*n_range);
      const MahlerEstimate measure = mahler_root_product(associated_laurent(steps, family));
      std::vector<long> ns;
      for (long n = r.first; n <= r.last; ++n) {
        if (admissible(steps, family, n)) ns.push_back(n);
      }
      if (ns.empty()) throw UsageError("no connected canonical n in " + *n_range);
      auto rows = ordered_map<Record>(ns.size(), [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        const AsymptoticPoint p = asymptotic_ratio(steps, family, ns[i], measure);
        Record row = base_record(canonicalize(ns[i], steps, family == Family::kDiagonal));
        row.tau = p.tau.to_string();
        row.mahler = measure.value;
        row.log_mahler = measure.small_measure;
        row.ratio = p.ratio;
        row.method = "formula";
        row.status = "ok";
        row.elapsed_ms = elapsed_since(start);
        return row;
      });
      result.rows = std::move(rows);
    } else if (*sequence) {
      const auto steps = sorted_steps(parse_list(steps_text, "step"));
      const Family family = parse_family(family_text);
      const Range r = parse_range(*n_range);
      std::vector<BigInt> values;
      for (const auto& d : sequence_a(steps, family, r.first, r.last)) {
        Record row = mahler_row(steps, family, MahlerEstimate{});
        row.mahler = row.mahler_error = row.log_mahler = std::nullopt;
        row.method = "formula";
        row.n = d.n;
        row.tau = d.tau.to_string();
        row.coefficient = d.coefficient;
        row.a = d.a.get_str();
        values.push_back(d.a);
        result.rows.push_back(std::move(row));
      }
      if (!recursion_text.empty()) {
        const auto coeffs = parse_list(recursion_text, "recursion coefficient");
        const bool ok = satisfies_recursion(values, coeffs);
        Record row = mahler_row(steps, family, MahlerEstimate{});
        row.mahler = row.mahler_error = row.log_mahler = std::nullopt;
        row.method = std::nullopt;
        row.check = "recursion";
        row.status = ok ? "pass" : "fail";
        row.message = "coefficients " + recursion_text;
        result.rows.push_back(std::move(row));
        if (!ok) {
          result.code = kVerificationFailed;
          result.diagnostic = "a(n) does not satisfy the recursion " + recursion_text;
        }
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << '\n';
    return kCertificationFailed;
  } catch (const TheoremViolation& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const OracleCeilingError& e) {
    err << "error: " << e.what() << " (raise --oracle-ceiling or CIRC_ORACLE_CEILING)\n";
    return kParseError;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kCertificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }

  if (out_path.empty()) {
    emit(result.rows, format, timings, out);
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kIoError;
    }
    emit(result.rows, format, timings, file);
    file.flush();
    if (!file) {
      err << "error: write to " << out_path << " failed\n";
      return kIoError;
    }
  }
  if (result.code != kOk) err << result.diagnostic << '\n';
  return result.code;
}

}  // namespace circulant::cli
