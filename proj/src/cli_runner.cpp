#include "paneitz/cli_runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "paneitz/bounds.hpp"
#include "paneitz/centering.hpp"
#include "paneitz/conformal_checks.hpp"
#include "paneitz/rng.hpp"

namespace paneitz {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

int resolve_threads(const RunConfig& config) {
  if (config.thread_count) return std::max(1, *config.thread_count);
  if (const char* env = std::getenv("PANEITZ_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp<unsigned>(hw == 0 ? 1 : hw, 1, 16));
}

// Runs fn(i) for i in [0, count) on `threads` workers; any exceptions are the
// callee's responsibility. Output ordering is the caller's: results land in
// preallocated slots, so the assembly is independent of scheduling.
void parallel_for(long long count, int threads, const std::function<void(long long)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const long long i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

FlatTorus random_torus(int n, Rng& rng) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& v : w) {
    v = rng.uniform(0.5, 1.5);
    sum += v;
  }
  FlatTorus torus;
  for (double v : w) torus.radii.push_back(std::sqrt(v / sum));
  // renormalize exactly enough for the 1e-14 constructor check
  double s2 = 0.0;
  for (double r : torus.radii) s2 += r * r;
  const double scale = 1.0 / std::sqrt(s2);
  for (double& r : torus.radii) r *= scale;
  return torus;
}

ModelManifold model_from_config(const RunConfig& cfg) {
  if (cfg.model_kind == "sphere") {
    if (cfg.n < 2) throw std::invalid_argument("sphere model: --n >= 2 required");
    return GeodesicSphere{cfg.n, cfg.p, cfg.c, cfg.r};
  }
  if (cfg.model_kind == "product") {
    if (cfg.n < 2 || cfg.a < 1 || cfg.a >= cfg.n)
      throw std::invalid_argument("product model: needs --n and 1 <= --a < n");
    if (!(cfg.r1 > 0.0 && cfg.r1 < 1.0))
      throw std::invalid_argument("product model: --r1 in (0,1) required");
    return make_product_sphere(cfg.a, cfg.n - cfg.a, cfg.r1);
  }
  if (cfg.model_kind == "torus") {
    if (cfg.radii.empty())
      throw std::invalid_argument("torus model: --radii required");
    return FlatTorus{cfg.radii};
  }
  throw std::invalid_argument("unknown model kind '" + cfg.model_kind +
                              "' (expected sphere | product | torus)");
}

std::string report_text(const BoundReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << " c=" << r.c << (r.n_valid ? "" : "  [probe: n <= 6]") << "\n"
     << "  lambda1        = " << fmt(r.lambda1) << "  (mean-Q bound " << fmt(r.lambda1_bound)
     << ")\n"
     << "  lambda2        = " << fmt(r.lambda2) << "\n"
     << "  rhs_theorem    = " << fmt(r.rhs_theorem) << "\n"
     << "  rhs_corollary  = " << fmt(r.rhs_corollary) << "\n";
  if (r.rhs_remark31) os << "  rhs_remark31   = " << fmt(*r.rhs_remark31) << "\n";
  os << "  slack_theorem  = " << fmt(r.slack_theorem) << "\n"
     << "  equality       = " << (r.equality ? "true" : "false") << "\n";
  return os.str();
}

bool violates(const BoundReport& r) {
  return r.slack_theorem < -1e-10 * std::max(1.0, r.rhs_theorem);
}

RunResult run_coeffs(const RunConfig& cfg) {
  const auto co = coefficients(cfg.n, cfg.extrapolated);
  RunResult res;
  if (cfg.format == "json") {
    ordered_json j;
    j["n"] = co.n;
    j["a"] = co.a;
    j["b"] = co.b;
    j["c"] = co.c;
    j["d"] = co.d;
    j["exact"] = {{"a", co.a_exact.str()},
                  {"b", co.b_exact.str()},
                  {"c", co.c_exact.str()},
                  {"d", co.d_exact.str()}};
    j["extrapolated"] = co.extrapolated;
    res.output = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << "n = " << co.n << (co.extrapolated ? "  (extrapolated)" : "") << "\n"
       << "a = " << fmt(co.a) << " = " << co.a_exact.str() << "\n"
       << "b = " << fmt(co.b) << " = " << co.b_exact.str() << "\n"
       << "c = " << fmt(co.c) << " = " << co.c_exact.str() << "\n"
       << "d = " << fmt(co.d) << " = " << co.d_exact.str() << "\n";
    res.output = os.str();
  }
  return res;
}

RunResult run_spectrum(const RunConfig& cfg) {
  const ModelManifold model = model_from_config(cfg);
  const ModelData md = model_data(model);
  const auto coeffs_v = coefficients(md.invariants.n, md.invariants.n < 5);
  const QValue q = q_curvature(md.curvature, coeffs_v);
  const auto spec = enumerate_spectrum(md.spectrum, md.curvature, q, coeffs_v,
                                       std::max<long long>(2, cfg.count));
  RunResult res;
  if (cfg.format == "json") {
    ordered_json j;
    j["n"] = md.invariants.n;
    j["slices"] = ordered_json::array();
    for (const auto& s : spec.slices) {
      ordered_json js;
      js["value"] = s.value;
      js["multiplicity"] = s.multiplicity;
      js["modes"] = s.modes;
      j["slices"].push_back(js);
    }
    j["certificate"] = {{"cutoff", spec.certificate.cutoff},
                        {"lower_bound_at_cutoff", spec.certificate.lower_bound_at_cutoff},
                        {"certified_count", spec.certificate.certified_count}};
    res.output = j.dump() + "\n";
  } else if (cfg.format == "csv") {
    std::string out = "value,multiplicity,modes\n";
    for (const auto& s : spec.slices) {
      out += fmt(s.value) + "," + std::to_string(s.multiplicity) + ",";
      for (size_t i = 0; i < s.modes.size(); ++i)
        out += (i ? ";" : "") + std::to_string(s.modes[i]);
      out += "\n";
    }
    res.output = out;
  } else {
    std::ostringstream os;
    for (const auto& s : spec.slices) {
      os << fmt(s.value) << "  x" << s.multiplicity << "  modes(";
      for (size_t i = 0; i < s.modes.size(); ++i) os << (i ? "," : "") << s.modes[i];
      os << ")\n";
    }
    os << "certified " << spec.certificate.certified_count << " eigenvalues below "
       << fmt(spec.certificate.lower_bound_at_cutoff) << " (cutoff s* = "
       << fmt(spec.certificate.cutoff) << ")\n";
    res.output = os.str();
  }
  return res;
}

RunResult run_verify(const RunConfig& cfg) {
  const ModelManifold model = model_from_config(cfg);
  BoundReport rep = verify_theorem(model);
  if (cfg.distinct) {
    // Alternative lambda2 reading (second distinct eigenvalue) for
    // comparison; on catalog models lambda1 is the simple constant mode, so
    // the two readings coincide there.
    const ModelData md = model_data(model);
    const auto co = coefficients(md.invariants.n, md.invariants.n < 5);
    const QValue q = q_curvature(md.curvature, co);
    const auto spec = enumerate_spectrum(md.spectrum, md.curvature, q, co, 2);
    rep.lambda2 = second_eigenvalue(spec.slices, /*distinct=*/true);
    rep.slack_theorem = rep.rhs_theorem - rep.lambda2;
    rep.equality = std::abs(rep.slack_theorem) <= 1e-9 * rep.rhs_theorem;
  }
  RunResult res;
  res.output = (cfg.format == "json") ? bound_report_json(rep) + "\n" : report_text(rep);
  if (!rep.n_valid)
    res.diagnostics = "note: n <= 6 is outside the proven range; reporting probe values only\n";
  if (rep.n_valid && violates(rep)) res.exit_code = kExitViolation;
  return res;
}

struct SweepRow {
  std::vector<std::pair<std::string, std::string>> params;
  BoundReport report;
  std::string status = "ok";
  bool have_report = false;
};

std::string verdict(const SweepRow& row) {
  if (row.status != "ok") return "error";
  if (!row.report.n_valid) return "probe";
  return violates(row.report) ? "violation" : "ok";
}

RunResult sweep_output(const RunConfig& cfg, const std::vector<SweepRow>& rows) {
  RunResult res;
  bool any_violation = false, any_error = false;
  for (const auto& row : rows) {
    if (row.status != "ok") any_error = true;
    else if (row.report.n_valid && violates(row.report)) any_violation = true;
  }
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      for (const auto& [k, v] : row.params) {
        // numeric params stay numeric in JSON
        try {
          size_t pos = 0;
          const double num = std::stod(v, &pos);
          if (pos == v.size()) { j[k] = num; continue; }
        } catch (...) {}
        j[k] = v;
      }
      if (row.have_report) {
        j["lambda1"] = row.report.lambda1;
        j["lambda2"] = row.report.lambda2;
        j["rhs_theorem"] = row.report.rhs_theorem;
        j["rhs_corollary"] = row.report.rhs_corollary;
        j["slack"] = row.report.slack_theorem;
        j["equality"] = row.report.equality;
      }
      j["verdict"] = verdict(row);
      j["status"] = row.status;
      arr.push_back(j);
    }
    res.output = arr.dump() + "\n";
  } else {
    std::string out;
    if (!rows.empty()) {
      for (const auto& [k, v] : rows.front().params) out += k + ",";
      out += "lambda1,lambda2,rhs_theorem,rhs_corollary,slack,equality,verdict,status\n";
    }
    for (const auto& row : rows) {
      for (const auto& [k, v] : row.params) out += v + ",";
      if (row.have_report) {
        const auto& r = row.report;
        out += fmt(r.lambda1) + "," + fmt(r.lambda2) + "," + fmt(r.rhs_theorem) + "," +
               fmt(r.rhs_corollary) + "," + fmt(r.slack_theorem) + "," +
               (r.equality ? "true" : "false") + ",";
      } else {
        out += ",,,,,,";
      }
      out += verdict(row) + "," + row.status + "\n";
    }
    res.output = out;
  }
  if (any_violation) res.exit_code = kExitViolation;
  else if (any_error) res.exit_code = kExitNumerical;
  return res;
}

RunResult run_sweep(const RunConfig& cfg) {
  // Assemble the model per row first, so grid mistakes surface as usage
  // errors before any computation.
  std::vector<SweepRow> rows;
  std::vector<ModelManifold> models;

  auto grid_values = [](const GridSpec& g) {
    if (g.count < 2) throw std::invalid_argument("sweep: grid count must be >= 2");
    std::vector<double> v(g.count);
    for (int i = 0; i < g.count; ++i)
      v[i] = g.start + (g.end - g.start) * i / (g.count - 1);
    return v;
  };

  if (cfg.model_kind == "sphere") {
    if (cfg.n_grid) {
      const auto [lo, hi] = *cfg.n_grid;
      if (lo > hi || lo < 2) throw std::invalid_argument("sweep: bad n-grid");
      for (int n = lo; n <= hi; ++n) {
        models.push_back(GeodesicSphere{n, cfg.p, cfg.c, cfg.r});
        rows.push_back({{{"n", std::to_string(n)},
                         {"c", std::to_string(cfg.c)},
                         {"r", fmt(cfg.r)}},
                        {}, "ok", false});
      }
    } else if (cfg.r_grid) {
      for (double r : grid_values(*cfg.r_grid)) {
        models.push_back(GeodesicSphere{cfg.n, cfg.p, cfg.c, r});
        rows.push_back({{{"n", std::to_string(cfg.n)},
                         {"c", std::to_string(cfg.c)},
                         {"r", fmt(r)}},
                        {}, "ok", false});
      }
    } else {
      throw std::invalid_argument("sphere sweep: --n-grid or --r-grid required");
    }
  } else if (cfg.model_kind == "product") {
    if (!cfg.r1_grid) throw std::invalid_argument("product sweep: --r1-grid required");
    if (cfg.n < 2 || cfg.a < 1 || cfg.a >= cfg.n)
      throw std::invalid_argument("product sweep: needs --n and 1 <= --a < n");
    for (double r1 : grid_values(*cfg.r1_grid)) {
      models.push_back(make_product_sphere(cfg.a, cfg.n - cfg.a, r1));
      rows.push_back({{{"n", std::to_string(cfg.n)},
                       {"a", std::to_string(cfg.a)},
                       {"r1", fmt(r1)}},
                      {}, "ok", false});
    }
  } else if (cfg.model_kind == "torus") {
    if (cfg.n < 2) throw std::invalid_argument("torus sweep: --n >= 2 required");
    if (cfg.count < 1) throw std::invalid_argument("torus sweep: --count >= 1 required");
    Rng rng(cfg.seed);
    for (long long i = 0; i < cfg.count; ++i) {
      FlatTorus torus = random_torus(cfg.n, rng);
      std::string radii;
      for (size_t j = 0; j < torus.radii.size(); ++j)
        radii += (j ? ";" : "") + fmt(torus.radii[j]);
      models.push_back(torus);
      rows.push_back({{{"index", std::to_string(i)},
                       {"n", std::to_string(cfg.n)},
                       {"radii", radii}},
                      {}, "ok", false});
    }
  } else {
    throw std::invalid_argument("sweep: unknown model kind '" + cfg.model_kind + "'");
  }

  parallel_for(static_cast<long long>(models.size()), resolve_threads(cfg), [&](long long i) {
    try {
      rows[i].report = verify_theorem(models[i]);
      rows[i].have_report = true;
    } catch (const std::exception& e) {
      rows[i].status = e.what();
    }
  });
  return sweep_output(cfg, rows);
}

RunResult run_center(const RunConfig& cfg) {
  Eigen::MatrixXd points;
  Eigen::VectorXd weights;
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::invalid_argument("center: cannot open '" + cfg.input_path + "'");
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_array() || j.empty())
      throw std::invalid_argument("center: input must be a nonempty JSON array of "
                                  "{point, weight} objects");
    const size_t dim = j.front().at("point").size();
    points.resize(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(dim));
    weights.resize(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) {
      const auto& pt = j[i].at("point");
      if (pt.size() != dim)
        throw std::invalid_argument("center: inconsistent point dimensions");
      for (size_t k = 0; k < dim; ++k) points(i, k) = pt[k].get<double>();
      const double norm = points.row(i).norm();
      if (norm == 0.0) throw std::invalid_argument("center: zero point");
      points.row(i) /= norm; // tolerate small drift in stored inputs
      weights(i) = j[i].at("weight").get<double>();
    }
  } else if (cfg.random_points > 0) {
    Rng rng(cfg.seed);
    points.resize(cfg.random_points, cfg.dim);
    weights.resize(cfg.random_points);
    for (long long i = 0; i < cfg.random_points; ++i) {
      for (int k = 0; k < cfg.dim; ++k) points(i, k) = rng.normal();
      points.row(i) /= points.row(i).norm();
      weights(i) = rng.uniform(0.1, 10.0);
    }
  } else {
    throw std::invalid_argument("center: provide --input <file> or --random <count>");
  }

  const CenteringResult result =
      center_measure(points, weights, {cfg.tol, cfg.max_iter});
  RunResult res;
  if (cfg.format == "json") {
    ordered_json j;
    j["p"] = std::vector<double>(result.p.data(), result.p.data() + result.p.size());
    j["residual"] = result.residual;
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    res.output = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << "p = [";
    for (Eigen::Index i = 0; i < result.p.size(); ++i)
      os << (i ? ", " : "") << fmt(result.p(i));
    os << "]\nresidual = " << fmt(result.residual) << "\niterations = " << result.iterations
       << "\nconverged = " << (result.converged ? "true" : "false") << "\n";
    res.output = os.str();
  }
  if (!result.converged) {
    res.exit_code = kExitNumerical;
    res.diagnostics = "center: did not reach tolerance (best residual " +
                      fmt(result.residual) + ")\n";
  }
  return res;
}

RunResult run_conformal_check(const RunConfig& cfg) {
  const int n = cfg.n >= 2 ? cfg.n : 7;
  FlatTorus torus;
  if (!cfg.radii.empty()) {
    torus.radii = cfg.radii;
    if (static_cast<int>(torus.radii.size()) != n)
      throw std::invalid_argument("conformal-check: --radii length must match --n");
  } else {
    torus.radii.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
  }
  std::vector<int> sizes = cfg.grid_sizes;
  if (sizes.empty()) sizes.assign(n, 8);
  if (static_cast<int>(sizes.size()) != n)
    throw std::invalid_argument("conformal-check: one grid size per factor required");

  std::vector<double> p;
  if (cfg.p_norm != 0.0) {
    if (!(cfg.p_norm > 0.0 && cfg.p_norm < 1.0))
      throw std::invalid_argument("conformal-check: --p-norm must lie in [0, 1)");
    p.assign(2 * n, 0.0);
    p[0] = cfg.p_norm; // first coordinate pair; u then varies along factor 1
  }

  const auto conf = conformality_check_exact(torus, sizes, p);

  // Integration-by-parts identity on a seeded band-limited field (spectrally
  // exact at any admissible grid size).
  ProductGrid grid(sizes, torus.radii);
  GridField u(grid);
  {
    Rng rng(cfg.seed);
    std::vector<double> amp_c(n), amp_s(n);
    for (int j = 0; j < n; ++j) {
      amp_c[j] = rng.uniform(-1.0, 1.0);
      amp_s[j] = rng.uniform(-1.0, 1.0);
    }
    std::vector<int> idx(n);
    double maxabs = 0.0;
    for (long long i = 0; i < grid.total(); ++i) {
      grid.unflatten(i, idx);
      double v = 0.0;
      for (int j = 0; j < n; ++j)
        v += amp_c[j] * std::cos(grid.theta(j, idx[j])) +
             amp_s[j] * std::sin(grid.theta(j, idx[j]));
      u.values[i] = v;
      maxabs = std::max(maxabs, std::abs(v));
    }
    for (double& v : u.values) v *= 0.2 / maxabs;
  }
  const double ibp = ibp_identity_check(u);

  std::optional<ConformalFactorInequalities> lem;
  if (n >= 7) lem = conformal_factor_inequalities(torus, sizes, p);

  if (!cfg.export_u_path.empty()) {
    const GridField ucf = conformal_factor_closed_form(torus, sizes, p);
    std::ofstream out(cfg.export_u_path);
    if (!out) throw std::invalid_argument("conformal-check: cannot write '" +
                                          cfg.export_u_path + "'");
    out << grid_field_csv(ucf);
  }

  constexpr double kTol = 1e-8;
  const bool ok = conf.max_offdiag <= kTol && conf.max_diag_dev <= kTol &&
                  conf.max_e2u_dev <= kTol && ibp <= kTol &&
                  (!lem || (lem->slack_main >= -kTol && lem->slack_intermediate >= -kTol));

  RunResult res;
  if (cfg.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["p_norm"] = cfg.p_norm;
    j["grid"] = sizes;
    j["conformality"] = {{"max_offdiag", conf.max_offdiag},
                         {"max_diag_dev", conf.max_diag_dev},
                         {"max_e2u_dev", conf.max_e2u_dev}};
    j["ibp_residual"] = ibp;
    if (lem) {
      j["factor_inequalities"] = {{"kappa", lem->kappa},
                      {"mean_e2u", lem->mean_e2u},
                      {"mean_e4u", lem->mean_e4u},
                      {"mean_grad", lem->mean_grad},
                      {"slack_main", lem->slack_main},
                      {"slack_intermediate", lem->slack_intermediate},
                      {"e2u_deviation", lem->e2u_deviation}};
    }
    j["pass"] = ok;
    res.output = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << "conformality: max offdiag " << fmt(conf.max_offdiag) << ", max diag dev "
       << fmt(conf.max_diag_dev) << ", e2u dev " << fmt(conf.max_e2u_dev) << "\n"
       << "ibp residual: " << fmt(ibp) << "\n";
    if (lem)
      os << "factor-inequality slacks: main " << fmt(lem->slack_main) << ", intermediate "
         << fmt(lem->slack_intermediate) << " (e2u dev " << fmt(lem->e2u_deviation) << ")\n";
    os << (ok ? "pass" : "FAIL") << "\n";
    res.output = os.str();
  }
  if (!ok) res.exit_code = kExitNumerical;
  return res;
}

} // namespace

RunConfig config_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("config: JSON object expected");
  RunConfig cfg;
  static const std::vector<std::string> known = {
      "command", "format", "model", "count", "r1_grid", "r_grid", "n_grid",
      "seed", "thread_count", "tol", "max_iter", "input", "random_points",
      "dim", "p_norm", "grid_sizes", "export_u", "extrapolated", "distinct", "n"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  cfg.command = j.value("command", "");
  cfg.format = j.value("format", "text");
  cfg.n = j.value("n", 0);
  if (j.contains("model")) {
    const auto& m = j["model"];
    cfg.model_kind = m.value("kind", "");
    cfg.n = m.value("n", cfg.n);
    cfg.p = m.value("p", 1);
    cfg.c = m.value("c", 0);
    cfg.a = m.value("a", 0);
    cfg.r = m.value("r", 1.0);
    cfg.r1 = m.value("r1", 0.0);
    if (m.contains("radii")) cfg.radii = m["radii"].get<std::vector<double>>();
  }
  cfg.count = j.value("count", 10);
  auto read_grid = [&](const char* key) -> std::optional<GridSpec> {
    if (!j.contains(key)) return std::nullopt;
    const auto& g = j[key];
    return GridSpec{g.at("start").get<double>(), g.at("end").get<double>(),
                    g.at("count").get<int>()};
  };
  cfg.r1_grid = read_grid("r1_grid");
  cfg.r_grid = read_grid("r_grid");
  if (j.contains("n_grid")) {
    const auto& g = j["n_grid"];
    cfg.n_grid = std::make_pair(g.at("start").get<int>(), g.at("end").get<int>());
  }
  cfg.seed = j.value("seed", 0ULL);
  if (j.contains("thread_count")) cfg.thread_count = j["thread_count"].get<int>();
  cfg.tol = j.value("tol", 1e-9);
  cfg.max_iter = j.value("max_iter", 200);
  cfg.input_path = j.value("input", "");
  cfg.random_points = j.value("random_points", 0LL);
  cfg.dim = j.value("dim", 8);
  cfg.p_norm = j.value("p_norm", 0.0);
  if (j.contains("grid_sizes")) cfg.grid_sizes = j["grid_sizes"].get<std::vector<int>>();
  cfg.export_u_path = j.value("export_u", "");
  cfg.extrapolated = j.value("extrapolated", false);
  cfg.distinct = j.value("distinct", false);
  return cfg;
}

RunResult run(const RunConfig& config) {
  try {
    if (config.format != "json" && config.format != "csv" && config.format != "text")
      throw std::invalid_argument("format must be json, csv or text");
    if (config.command == "coeffs") return run_coeffs(config);
    if (config.command == "spectrum") return run_spectrum(config);
    if (config.command == "verify") return run_verify(config);
    if (config.command == "sweep") return run_sweep(config);
    if (config.command == "center") return run_center(config);
    if (config.command == "conformal-check") return run_conformal_check(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
  } catch (const NumericalError& e) {
    return {kExitNumerical, "", std::string("numerical failure: ") + e.what() + "\n"};
  } catch (const nlohmann::json::exception& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitNumerical, "", std::string("failure: ") + e.what() + "\n"};
  }
}

} // namespace paneitz
