#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>
#include <unistd.h>

#include "commands.hpp"
#include "spectral/error.hpp"

namespace {

using spectral::cli::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitWarnings = 2;
constexpr int kExitInput = 3;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("spectral-sens");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("SPECTRAL_SENS_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off.
    if (level != spdlog::level::off || std::string_view(env) == "off") spdlog::set_level(level);
  }
}

// Write next to the target and rename so a failed run never leaves a partial file.
void write_atomically(const std::filesystem::path& target, const std::string& body) {
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw spectral::Error(spectral::ErrorCode::io, "cannot write " + tmp.string());
    out << body;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw spectral::Error(spectral::ErrorCode::io, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw spectral::Error(spectral::ErrorCode::io, "cannot rename onto " + target.string());
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format: json or csv");
  sub->add_option("--out", cfg.out, "Output path (default: stdout)");
  sub->add_option("--seed", cfg.seed, "Seed for sampled directions")->capture_default_str();
  sub->add_option("--cluster-tol", cfg.cluster_tol, "Cluster detection tolerance");
  sub->add_option("--d", cfg.directions, "Unit direction as a comma list; repeatable");
  sub->add_option("--n-directions", cfg.n_directions, "Number of sampled unit directions");
  sub->add_flag("--axes", cfg.axes, "Use the coordinate axes as directions");
}

void add_family(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family_file, "Affine family JSON file");
  sub->add_option("--builtin", cfg.builtin, "Builtin family (kato)");
  sub->add_option("--x0", cfg.x0, "Base point as a comma list");
  sub->add_option("--m,--k", cfg.indices, "1-based eigenvalue or singular value indices");
}

int exit_code_for(const spectral::Error& e) {
  switch (e.code()) {
    case spectral::ErrorCode::parse:
    case spectral::ErrorCode::io:
    case spectral::ErrorCode::dimension:
      return kExitInput;
    default:
      return kExitMath;
  }
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  RunConfig cfg;
  CLI::App app{"Directional derivatives of ordered eigenvalues and singular values"};
  app.require_subcommand(1);

  auto* eig = app.add_subcommand("eig", "Eigenvalue derivatives of a Hermitian family");
  auto* sv = app.add_subcommand("sv", "Singular value derivatives, both formulas");
  auto* scan = app.add_subcommand("scan", "Derivative over sampled directions (CSV)");
  auto* verify = app.add_subcommand("verify", "Compare analytic values with finite differences");
  auto* ikramov = app.add_subcommand("ikramov", "Critical point analysis of f(xi)");
  auto* selftest = app.add_subcommand("selftest", "Built-in closed-form checks");
  for (auto* sub : {eig, sv, scan, verify, ikramov, selftest}) add_common(sub, cfg);
  for (auto* sub : {eig, sv, scan, verify}) add_family(sub, cfg);
  for (auto* sub : {scan, verify}) {
    sub->add_option("--spectrum", cfg.spectrum, "auto, eig or sv")->capture_default_str();
  }
  verify->add_option("--h0", cfg.h0, "Initial finite-difference step");
  verify->add_option("--tol", cfg.tol, "Relative agreement tolerance")->capture_default_str();
  ikramov->add_option("--matrix", cfg.matrix_file, "Square matrix JSON file, n >= 3");
  ikramov->add_option("--xi0", cfg.xi0, "Candidate point (4 reals); default: maximizer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const auto result = spectral::cli::run_command(cfg);
    if (cfg.out.empty()) {
      std::cout << result.body << std::flush;
    } else {
      write_atomically(cfg.out, result.body);
    }
    if (result.failed) return kExitMath;
    return result.warnings ? kExitWarnings : kExitOk;
  } catch (const spectral::cli::UsageError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return kExitInput;
  } catch (const spectral::Error& e) {
    std::cerr << "error[" << e.code_name() << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
}
