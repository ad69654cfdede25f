#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paneitz {

// CLI exit codes.
inline constexpr int kExitOk = 0;        // success / inequality verified
inline constexpr int kExitViolation = 1; // inequality violated (reportable finding)
inline constexpr int kExitUsage = 2;     // bad config or parameters
inline constexpr int kExitNumerical = 3; // certificate or convergence failure

struct GridSpec {
  double start = 0.0;
  double end = 0.0;
  int count = 0;
};

/// One fully validated batch run. Built either from CLI flags or from a JSON
/// config file; every command is deterministic given the config and seed.
struct RunConfig {
  std::string command;       // coeffs | spectrum | verify | sweep | center | conformal-check
  std::string format = "text"; // json | csv | text

  // model descriptor
  std::string model_kind; // sphere | product | torus
  int n = 0;
  int p = 1;
  int c = 0;
  int a = 0;
  double r = 1.0;
  double r1 = 0.0;
  std::vector<double> radii;

  // command knobs
  long long count = 10;               // spectrum depth / random-model count
  std::optional<GridSpec> r1_grid;    // product sweep
  std::optional<GridSpec> r_grid;     // sphere radius sweep
  std::optional<std::pair<int, int>> n_grid; // sphere dimension sweep (inclusive)
  std::uint64_t seed = 0;
  std::optional<int> thread_count;    // default: PANEITZ_THREADS, then hardware
  double tol = 1e-9;
  int max_iter = 200;
  std::string input_path;             // center: point-cloud JSON
  long long random_points = 0;        // center: generate a random cloud instead
  int dim = 8;                        // center: ambient dimension for random clouds
  double p_norm = 0.0;                // conformal-check: |p|
  std::vector<int> grid_sizes;        // conformal-check: per-factor grid sizes
  std::string export_u_path;          // conformal-check: optional u-field CSV snapshot
  bool extrapolated = false;          // coeffs: allow n in {3,4}
  bool distinct = false;              // lambda2 as second distinct value
};

RunConfig config_from_json(const std::string& text);

struct RunResult {
  int exit_code = 0;
  std::string output; // serialized report for stdout
  std::string diagnostics; // human-readable notes for stderr
};

/// Executes one command. Deterministic for a fixed config and seed,
/// byte-identical across thread counts.
RunResult run(const RunConfig& config);

} // namespace paneitz
