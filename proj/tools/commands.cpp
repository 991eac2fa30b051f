#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "spectral/spectral.hpp"

namespace spectral::cli {

namespace {

using nlohmann::json;

enum class Spectrum { eig, sv };

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
      throw UsageError(std::string(what) + ": cannot parse '" + text + "' as a list of reals");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : parse_reals(text.empty() ? "1" : text, "--m/--k")) {
    if (v < 1.0 || v != std::floor(v)) {
      throw UsageError("--m/--k: indices must be positive integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct LoadedFamily {
  MatrixFamily family;
  std::string source;
};

LoadedFamily load_family(const RunConfig& cfg) {
  if (cfg.family_file.empty() == cfg.builtin.empty()) {
    throw UsageError("exactly one of --family or --builtin is required");
  }
  if (!cfg.builtin.empty()) {
    if (cfg.builtin != "kato") throw UsageError("unknown builtin family '" + cfg.builtin + "'");
    return {kato_family(), "builtin:kato"};
  }
  try {
    return {make_affine(affine_family_from_json(read_json_file(cfg.family_file))),
            cfg.family_file};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::io || e.code() == ErrorCode::parse) throw;
    throw Error(ErrorCode::parse, std::string("invalid family file: ") + e.what());
  }
}

std::vector<double> load_point(const RunConfig& cfg, const MatrixFamily& family) {
  if (cfg.x0.empty()) throw UsageError("--x0 is required");
  std::vector<double> x0 = parse_reals(cfg.x0, "--x0");
  if (x0.size() != family.param_dim()) {
    throw UsageError("--x0 has " + std::to_string(x0.size()) + " entries, family has " +
                     std::to_string(family.param_dim()) + " parameters");
  }
  return x0;
}

enum class DirectionDefault { axes, sphere };

std::vector<std::vector<double>> load_directions(const RunConfig& cfg, std::size_t dim,
                                                 DirectionDefault fallback,
                                                 std::size_t fallback_count) {
  const int sources = !cfg.directions.empty() + cfg.n_directions.has_value() + cfg.axes;
  if (sources > 1) throw UsageError("use only one of --d, --n-directions, --axes");
  std::vector<std::vector<double>> out;
  if (!cfg.directions.empty()) {
    for (const auto& text : cfg.directions) {
      std::vector<double> d = parse_reals(text, "--d");
      if (d.size() != dim) {
        throw UsageError("--d '" + text + "' has " + std::to_string(d.size()) +
                         " entries, expected " + std::to_string(dim));
      }
      double ssq = 0.0;
      for (double v : d) ssq += v * v;
      if (std::abs(std::sqrt(ssq) - 1.0) > 1e-12) {
        throw UsageError("--d '" + text + "' is not a unit vector (norm " +
                         fmt17(std::sqrt(ssq)) + ")");
      }
      out.push_back(std::move(d));
    }
    return out;
  }
  if (cfg.n_directions) {
    if (*cfg.n_directions < 1) throw UsageError("--n-directions must be at least 1");
    return sphere_directions(dim, static_cast<std::size_t>(*cfg.n_directions), cfg.seed);
  }
  if (cfg.axes || fallback == DirectionDefault::axes) return axis_directions(dim);
  return sphere_directions(dim, fallback_count, cfg.seed);
}

Spectrum pick_spectrum(const RunConfig& cfg, const MatrixFamily& family) {
  if (cfg.command == "eig") return Spectrum::eig;
  if (cfg.command == "sv") return Spectrum::sv;
  if (cfg.spectrum == "eig") return Spectrum::eig;
  if (cfg.spectrum == "sv") return Spectrum::sv;
  return family.is_hermitian() ? Spectrum::eig : Spectrum::sv;
}

std::string output_format(const RunConfig& cfg, const char* fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

std::string csv_header(std::size_t dim, const std::vector<std::string>& tail) {
  std::string out = "index,dir";
  for (std::size_t i = 1; i <= dim; ++i) out += ",d" + std::to_string(i);
  for (const auto& t : tail) out += "," + t;
  return out + "\n";
}

std::string csv_prefix(std::size_t index, std::size_t dir, const std::vector<double>& d) {
  std::string out = std::to_string(index) + "," + std::to_string(dir);
  for (double v : d) out += "," + fmt17(v);
  return out;
}

std::string joined(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ";" : "") + fmt17(values[i]);
  return out;
}

DerivativeReport derivative(Spectrum s, const MatrixFamily& family, std::span<const double> x0,
                            std::size_t index, std::span<const double> d,
                            std::optional<double> tol) {
  return s == Spectrum::eig ? eig_directional_derivative(family, x0, index, d, tol)
                            : sv_directional_derivative(family, x0, index, d, tol);
}

json run_header(const RunConfig& cfg, const std::string& source, const std::vector<double>& x0) {
  json j{{"command", cfg.command}, {"family", source}, {"x0", x0}};
  if (cfg.cluster_tol) j["cluster_tol"] = *cfg.cluster_tol;
  return j;
}

CommandResult cmd_derivatives(const RunConfig& cfg) {
  const LoadedFamily loaded = load_family(cfg);
  const MatrixFamily& family = loaded.family;
  const std::vector<double> x0 = load_point(cfg, family);
  const auto indices = parse_indices(cfg.indices);
  const bool scan = cfg.command == "scan";
  const auto directions = load_directions(
      cfg, family.param_dim(), scan ? DirectionDefault::sphere : DirectionDefault::axes, 100);
  const Spectrum spectrum = pick_spectrum(cfg, family);
  const bool with_reduced = cfg.command == "sv";
  const std::string format = output_format(cfg, scan ? "csv" : "json");
  spdlog::info("{}: {} indices x {} directions", cfg.command, indices.size(), directions.size());

  CommandResult result;
  json reports = json::array();
  std::string csv = csv_header(family.param_dim(), with_reduced
                                                       ? std::vector<std::string>{"derivative", "mu", "path_delta"}
                                                       : std::vector<std::string>{"derivative", "mu"});
  for (std::size_t index : indices) {
    for (std::size_t k = 0; k < directions.size(); ++k) {
      const auto& d = directions[k];
      const DerivativeReport r = derivative(spectrum, family, x0, index, d, cfg.cluster_tol);
      for (const auto& w : r.warnings) spdlog::warn("index {} dir {}: {}", index, k, w);
      result.warnings = result.warnings || !r.warnings.empty();
      json entry = r;
      entry["index"] = index;
      entry["dir"] = k;
      std::string row = csv_prefix(index, k, d) + "," + fmt17(r.derivative) + "," + joined(r.mu);
      if (with_reduced) {
        const DerivativeReport reduced = sv_derivative_reduced(family, x0, index, d, cfg.cluster_tol);
        const double delta = std::abs(r.derivative - reduced.derivative);
        entry["reduced"] = {{"mu", reduced.mu}, {"derivative", reduced.derivative}};
        entry["path_delta"] = delta;
        row += "," + fmt17(delta);
      }
      reports.push_back(std::move(entry));
      csv += row + "\n";
    }
  }
  if (format == "csv") {
    result.body = std::move(csv);
  } else {
    json out = run_header(cfg, loaded.source, x0);
    out["spectrum"] = spectrum == Spectrum::eig ? "eig" : "sv";
    out["reports"] = std::move(reports);
    result.body = dump(out);
  }
  return result;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const LoadedFamily loaded = load_family(cfg);
  const MatrixFamily& family = loaded.family;
  const std::vector<double> x0 = load_point(cfg, family);
  const auto indices = parse_indices(cfg.indices);
  const auto directions = load_directions(cfg, family.param_dim(), DirectionDefault::axes, 0);
  const Spectrum spectrum = pick_spectrum(cfg, family);
  if (cfg.h0 && !(*cfg.h0 > 0.0)) throw UsageError("--h0 must be positive");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  const double h0 = cfg.h0.value_or(default_fd_step(x0));
  const std::string format = output_format(cfg, "json");

  CommandResult result;
  json checks = json::array();
  std::string csv = csv_header(family.param_dim(),
                               {"analytic", "fd", "abs_delta", "rel_delta", "status"});
  std::size_t passed = 0, failed = 0, inconclusive = 0;
  for (std::size_t index : indices) {
    const ScalarFunction phi = [&, index](std::span<const double> x) {
      const ComplexMatrix a = family.evaluate(x);
      if (spectrum == Spectrum::eig) return hermitian_eig(a).eigenvalues.at(index - 1);
      return sv_decomposition(a).sigma.at(index - 1);
    };
    for (std::size_t k = 0; k < directions.size(); ++k) {
      const auto& d = directions[k];
      const DerivativeReport r = derivative(spectrum, family, x0, index, d, cfg.cluster_tol);
      result.warnings = result.warnings || !r.warnings.empty();
      const FDEstimate fd = fd_directional(phi, x0, d, h0);
      const double abs_delta = std::abs(r.derivative - fd.extrapolated);
      const double rel_delta = abs_delta / std::max(1.0, std::abs(r.derivative));
      std::string status;
      if (!fd.trusted()) {
        status = "inconclusive";
        ++inconclusive;
      } else if (rel_delta <= cfg.tol) {
        status = "pass";
        ++passed;
      } else {
        status = "fail";
        ++failed;
      }
      spdlog::debug("verify index {} dir {}: {} vs {} ({})", index, k, r.derivative,
                    fd.extrapolated, status);
      checks.push_back({{"index", index},
                        {"dir", k},
                        {"d", d},
                        {"analytic", r.derivative},
                        {"fd", fd},
                        {"abs_delta", abs_delta},
                        {"rel_delta", rel_delta},
                        {"status", status},
                        {"warnings", r.warnings}});
      csv += csv_prefix(index, k, d) + "," + fmt17(r.derivative) + "," + fmt17(fd.extrapolated) +
             "," + fmt17(abs_delta) + "," + fmt17(rel_delta) + "," + status + "\n";
    }
  }
  result.failed = failed > 0;
  if (format == "csv") {
    result.body = std::move(csv);
  } else {
    json out = run_header(cfg, loaded.source, x0);
    out["spectrum"] = spectrum == Spectrum::eig ? "eig" : "sv";
    out["h0"] = h0;
    out["tol"] = cfg.tol;
    out["checks"] = std::move(checks);
    out["summary"] = {{"pass", passed}, {"fail", failed}, {"inconclusive", inconclusive}};
    out["pass"] = failed == 0;
    result.body = dump(out);
  }
  return result;
}

CommandResult cmd_ikramov(const RunConfig& cfg) {
  if (output_format(cfg, "json") != "json") throw UsageError("ikramov writes JSON only");
  if (cfg.matrix_file.empty()) throw UsageError("--matrix is required");
  ComplexMatrix a;
  try {
    a = matrix_from_json(read_json_file(cfg.matrix_file));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::io || e.code() == ErrorCode::parse) throw;
    throw Error(ErrorCode::parse, std::string("invalid matrix file: ") + e.what());
  }
  if (!a.is_square() || a.rows() < 3) {
    throw UsageError("ikramov needs a square matrix with n >= 3, got " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()));
  }
  json out{{"command", "ikramov"}, {"n", a.rows()}, {"index", ikramov_index(a.rows())}};
  std::vector<double> xi0;
  if (!cfg.xi0.empty()) {
    xi0 = parse_reals(cfg.xi0, "--xi0");
    if (xi0.size() != 4) throw UsageError("--xi0 needs 4 entries");
    out["xi0_source"] = "given";
  } else {
    spdlog::info("ikramov: searching for a local maximiser of f");
    const MaximizerResult best = maximize_ikramov_f(a);
    xi0 = best.xi;
    out["xi0_source"] = "maximizer";
    out["maximizer_evaluations"] = best.evaluations;
  }
  const auto directions = load_directions(cfg, 4, DirectionDefault::sphere, 64);
  const CriticalPointAnalysis analysis = classify_critical_point(a, xi0, directions, cfg.cluster_tol);
  for (const auto& w : analysis.warnings) spdlog::warn("ikramov: {}", w);
  out["f_value"] = ikramov_f(a, xi0);
  out["analysis"] = analysis;
  out["level_function"] = level_function_report(a, xi0, cfg.cluster_tol);
  double max_delta = 0.0;
  for (const auto& r : analysis.per_direction) max_delta = std::max(max_delta, r.reflection_delta);
  out["max_reflection_delta"] = max_delta;

  CommandResult result;
  result.warnings = !analysis.warnings.empty();
  result.body = dump(out);
  return result;
}

// Quick end-to-end checks against closed-form values.
CommandResult cmd_selftest(const RunConfig& cfg) {
  if (output_format(cfg, "json") != "json") throw UsageError("selftest writes JSON only");
  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, double got, double want, double tol) {
    const bool ok = std::abs(got - want) <= tol;
    all = all && ok;
    checks.push_back({{"name", name}, {"value", got}, {"expected", want}, {"pass", ok}});
  };

  const MatrixFamily kato = kato_family();
  const std::vector<double> origin = {0.0, 0.0};
  const std::vector<double> x34 = {3.0, 4.0};
  const std::vector<double> d = {0.6, 0.8};
  const std::vector<double> e1 = {1.0, 0.0};
  check("kato_origin_m1", eig_directional_derivative(kato, origin, 1, d).derivative, 1.0, 1e-9);
  check("kato_origin_m2", eig_directional_derivative(kato, origin, 2, d).derivative, -1.0, 1e-9);
  check("kato_34_m1", eig_directional_derivative(kato, x34, 1, e1).derivative, 0.6, 1e-9);
  check("kato_34_eigenvalue", hermitian_eig(kato.evaluate(x34)).eigenvalues[0], 5.0, 1e-12);
  const FDEstimate fd = fd_directional(
      [&](std::span<const double> x) { return hermitian_eig(kato.evaluate(x)).eigenvalues[0]; },
      x34, e1, default_fd_step(x34));
  check("kato_34_fd", fd.extrapolated, 0.6, 1e-6);

  const MatrixFamily scalar = make_affine(ComplexMatrix(1, 1), {ComplexMatrix::identity(1)});
  const std::vector<double> one = {1.0};
  const double embedded = sv_directional_derivative(scalar, one, 1, one).derivative;
  const double reduced = sv_derivative_reduced(scalar, one, 1, one).derivative;
  check("sv_scalar_embedding", embedded, 1.0, 1e-12);
  check("sv_path_delta", std::abs(embedded - reduced), 0.0, 1e-9);

  const CriticalPointAnalysis decisive = classify_spectra(2, {{3.0, 1.0, -2.0}});
  check("classify_decisive_f_bwd", decisive.per_direction[0].f_bwd, -1.0, 0.0);
  check("classify_decisive_label", decisive.critical_case == CriticalCase::decisive, 1.0, 0.0);
  const std::vector<double> levels = {3.0, 1.0, 1.0};
  const std::vector<double> xi0(4, 0.0);
  const CriticalPointAnalysis dubious =
      classify_critical_point(ComplexMatrix::diagonal(levels), xi0, sphere_directions(4, 8, cfg.seed));
  check("ikramov_dubious_label", dubious.critical_case == CriticalCase::dubious, 1.0, 0.0);
  check("ikramov_dubious_no_conclusion", dubious.conclusion.has_value(), 0.0, 0.0);

  CommandResult result;
  result.failed = !all;
  result.body = dump(json{{"command", "selftest"}, {"checks", std::move(checks)}, {"pass", all}});
  return result;
}

}  // namespace

CommandResult run_command(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  if (cfg.spectrum != "auto" && cfg.spectrum != "eig" && cfg.spectrum != "sv") {
    throw UsageError("--spectrum must be auto, eig or sv");
  }
  if (cfg.command == "eig" || cfg.command == "sv" || cfg.command == "scan") {
    return cmd_derivatives(cfg);
  }
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "ikramov") return cmd_ikramov(cfg);
  if (cfg.command == "selftest") return cmd_selftest(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace spectral::cli
