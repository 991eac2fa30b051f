#include "spectral/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "spectral/error.hpp"

namespace spectral {

namespace {

using nlohmann::json;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) parse_fail(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t positive_size(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    parse_fail(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> real_list(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) parse_fail(std::string(what) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

void to_json(json& j, const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back({z.real(), z.imag()});
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

void from_json(const json& j, ComplexMatrix& m) {
  const std::size_t rows = positive_size(j, "rows");
  const std::size_t cols = positive_size(j, "cols");
  const json& entries = member(j, "entries");
  if (!entries.is_array()) parse_fail("'entries' must be an array");
  if (entries.size() != rows * cols) {
    parse_fail("'entries' has " + std::to_string(entries.size()) + " items, expected " +
               std::to_string(rows * cols));
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      parse_fail("each entry must be a [re, im] pair of numbers");
    }
    values.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  m = ComplexMatrix(rows, cols, std::move(values));
}

void to_json(json& j, const AffineFamily& f) {
  j = json{{"base", f.base}, {"coefficients", f.coefficients}, {"hermitian", f.hermitian}};
  if (f.domain) j["domain"] = {{"lower", f.domain->lower}, {"upper", f.domain->upper}};
}

void from_json(const json& j, AffineFamily& f) {
  f.base = matrix_from_json(member(j, "base"));
  const json& coefficients = member(j, "coefficients");
  if (!coefficients.is_array()) parse_fail("'coefficients' must be an array");
  f.coefficients.clear();
  for (const auto& c : coefficients) f.coefficients.push_back(matrix_from_json(c));
  const json& hermitian = member(j, "hermitian");
  if (!hermitian.is_boolean()) parse_fail("'hermitian' must be a boolean");
  f.hermitian = hermitian.get<bool>();
  f.domain.reset();
  if (j.contains("domain")) {
    const json& d = j["domain"];
    f.domain = Box{real_list(member(d, "lower"), "domain.lower"),
                   real_list(member(d, "upper"), "domain.upper")};
  }
}

void to_json(json& j, const ClusterIndex& c) {
  j = json{{"m", c.m},   {"i", c.i},          {"j", c.j},   {"r", c.r},
           {"value", c.value}, {"tol", c.tol_used}, {"lo", c.lo}, {"hi", c.hi},
           {"width", c.width}};
}

void to_json(json& j, const DerivativeReport& r) {
  j = json{{"cluster", r.cluster},
           {"direction", r.direction},
           {"f_prime", r.f_prime},
           {"mu", r.mu},
           {"selected_index", r.selected_index},
           {"derivative", r.derivative},
           {"gap_guard", finite_or_null(r.gap_guard)},
           {"warnings", r.warnings},
           {"path", r.path}};
}

void to_json(json& j, const FDEstimate& e) {
  json steps = json::array();
  for (const auto& [h, quotient] : e.step_sequence) steps.push_back({h, quotient});
  j = json{{"value", e.value},
           {"extrapolated", e.extrapolated},
           {"stability_indicator", e.stability_indicator},
           {"trusted", e.trusted()},
           {"step_sequence", std::move(steps)}};
}

void to_json(json& j, const DirectionRecord& r) {
  j = json{{"d", r.d},         {"mu", r.mu},       {"f_fwd", r.f_fwd},
           {"f_bwd", r.f_bwd}, {"trace", r.trace}, {"antisymmetric", r.antisymmetric}};
  if (r.direct_bwd) {
    j["direct_bwd"] = *r.direct_bwd;
    j["reflection_delta"] = r.reflection_delta;
  }
}

void to_json(json& j, const CriticalPointAnalysis& a) {
  j = json{{"xi0", a.xi0},
           {"sigma0", a.sigma0},
           {"p", a.p},
           {"q", a.q},
           {"m", a.m},
           {"case", std::string(critical_case_name(a.critical_case))},
           {"check_tol", a.check_tol},
           {"per_direction", a.per_direction},
           {"h_gradient", a.h_gradient},
           {"trace_sums", a.trace_sums},
           {"refutations", a.refutations},
           {"warnings", a.warnings}};
  if (a.conclusion) j["conclusion"] = *a.conclusion;
}

void to_json(json& j, const LevelFunctionReport& r) {
  j = json{{"H_value", r.h_value},
           {"h_gradient", r.h_gradient},
           {"sigma0", r.sigma0},
           {"multiplicity", r.multiplicity}};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

ComplexMatrix matrix_from_json(const json& j) {
  ComplexMatrix m;
  try {
    from_json(j, m);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid matrix: ") + e.what());
  }
  return m;
}

AffineFamily affine_family_from_json(const json& j) {
  AffineFamily f;
  try {
    from_json(j, f);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid family: ") + e.what());
  }
  return f;
}

}  // namespace spectral
