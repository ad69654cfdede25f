#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paneitz/cli_runner.hpp"

namespace {

int execute(const paneitz::RunConfig& config) {
  const paneitz::RunResult result = paneitz::run(config);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  std::cout << result.output;
  return result.exit_code;
}

bool parse_grid(const std::string& text, paneitz::GridSpec& out) {
  // start:end:count
  std::istringstream is(text);
  std::string a, b, c;
  if (!std::getline(is, a, ':') || !std::getline(is, b, ':') || !std::getline(is, c))
    return false;
  try {
    out.start = std::stod(a);
    out.end = std::stod(b);
    out.count = std::stoi(c);
  } catch (...) {
    return false;
  }
  return true;
}

bool parse_int_range(const std::string& text, std::pair<int, int>& out) {
  // lo:hi
  std::istringstream is(text);
  std::string a, b;
  if (!std::getline(is, a, ':') || !std::getline(is, b)) return false;
  try {
    out.first = std::stoi(a);
    out.second = std::stoi(b);
  } catch (...) {
    return false;
  }
  return true;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral verifier for the Branson-Paneitz second-eigenvalue bound "
               "on model submanifolds of space forms"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON RunConfig file (overrides subcommands)");

  paneitz::RunConfig cfg;
  std::string r1_grid_text, r_grid_text, n_grid_text;
  int threads = 0;

  auto add_model_options = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model_kind, "sphere | product | torus");
    sub->add_option("--n", cfg.n, "intrinsic dimension");
    sub->add_option("--p", cfg.p, "codimension (sphere model)");
    sub->add_option("--c", cfg.c, "ambient curvature, -1 | 0 | 1 (sphere model)");
    sub->add_option("--r", cfg.r, "radius parameter (sphere model)");
    sub->add_option("--a", cfg.a, "first factor dimension (product model)");
    sub->add_option("--r1", cfg.r1, "first factor radius (product model)");
    sub->add_option("--radii", cfg.radii, "torus radii (sum of squares = 1)")
        ->delimiter(',');
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | csv | text");
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
    sub->add_option("--threads", threads, "worker threads (default: PANEITZ_THREADS)");
  };

  auto* coeffs = app.add_subcommand("coeffs", "Paneitz coefficients for one dimension");
  coeffs->add_option("--n", cfg.n, "dimension")->required();
  coeffs->add_flag("--extrapolated", cfg.extrapolated, "allow n in {3, 4}");
  add_common(coeffs);

  auto* spectrum = app.add_subcommand("spectrum", "certified Paneitz spectrum of a model");
  add_model_options(spectrum);
  spectrum->add_option("--count", cfg.count, "eigenvalues to certify (with multiplicity)");
  add_common(spectrum);

  auto* verify = app.add_subcommand("verify", "check the second-eigenvalue bound on a model");
  add_model_options(verify);
  verify->add_flag("--distinct", cfg.distinct,
                   "read lambda2 as the second distinct eigenvalue");
  add_common(verify);

  auto* sweep = app.add_subcommand("sweep", "bound check over a parameter grid");
  add_model_options(sweep);
  sweep->add_option("--r1-grid", r1_grid_text, "product sweep grid start:end:count");
  sweep->add_option("--r-grid", r_grid_text, "sphere radius grid start:end:count");
  sweep->add_option("--n-grid", n_grid_text, "sphere dimension range lo:hi");
  sweep->add_option("--count", cfg.count, "random torus count");
  add_common(sweep);

  auto* center = app.add_subcommand("center", "conformal centering of a weighted point cloud");
  center->add_option("--input", cfg.input_path, "JSON array of {point, weight}");
  center->add_option("--random", cfg.random_points, "generate a random cloud of this size");
  center->add_option("--dim", cfg.dim, "ambient dimension for random clouds");
  center->add_option("--tol", cfg.tol, "residual tolerance");
  center->add_option("--max-iter", cfg.max_iter, "Newton iteration cap");
  add_common(center);

  auto* conformal = app.add_subcommand("conformal-check",
                                       "conformality, integration-by-parts and "
                                       "conformal-factor inequality checks on a flat torus");
  conformal->add_option("--n", cfg.n, "torus dimension (default 7)");
  conformal->add_option("--radii", cfg.radii, "torus radii (default equal)")->delimiter(',');
  conformal->add_option("--grid", cfg.grid_sizes, "per-factor grid sizes (default 8)")
      ->delimiter(',');
  conformal->add_option("--p-norm", cfg.p_norm, "Mobius parameter norm (axis-aligned)");
  conformal->add_option("--export-u", cfg.export_u_path, "write the u field as CSV");
  add_common(conformal);

  CLI11_PARSE(app, argc, argv);

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file '" << config_path << "'\n";
      return paneitz::kExitUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
      return execute(paneitz::config_from_json(ss.str()));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return paneitz::kExitUsage;
    }
  }

  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return paneitz::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (threads > 0) cfg.thread_count = threads;
  if (!r1_grid_text.empty()) {
    paneitz::GridSpec g;
    if (!parse_grid(r1_grid_text, g)) {
      std::cerr << "error: bad --r1-grid (expected start:end:count)\n";
      return paneitz::kExitUsage;
    }
    cfg.r1_grid = g;
  }
  if (!r_grid_text.empty()) {
    paneitz::GridSpec g;
    if (!parse_grid(r_grid_text, g)) {
      std::cerr << "error: bad --r-grid (expected start:end:count)\n";
      return paneitz::kExitUsage;
    }
    cfg.r_grid = g;
  }
  if (!n_grid_text.empty()) {
    std::pair<int, int> range;
    if (!parse_int_range(n_grid_text, range)) {
      std::cerr << "error: bad --n-grid (expected lo:hi)\n";
      return paneitz::kExitUsage;
    }
    cfg.n_grid = range;
  }
  return execute(cfg);
}
