#include "paneitz/conformal_checks.hpp"

#include <cmath>
#include <stdexcept>

#include "paneitz/mobius.hpp"

namespace paneitz {

namespace {

struct TrigTables {
  // cos/sin of theta_j at every node of axis j
  std::vector<std::vector<double>> cos_t, sin_t;

  TrigTables(const ProductGrid& grid) {
    const int nf = grid.factors();
    cos_t.resize(nf);
    sin_t.resize(nf);
    for (int j = 0; j < nf; ++j) {
      const int N = grid.sizes()[j];
      cos_t[j].resize(N);
      sin_t[j].resize(N);
      for (int i = 0; i < N; ++i) {
        cos_t[j][i] = std::cos(grid.theta(j, i));
        sin_t[j][i] = std::sin(grid.theta(j, i));
      }
    }
  }
};

void base_point(const FlatTorus& m, const TrigTables& trig, std::span<const int> idx,
                std::span<double> x0) {
  const int n = static_cast<int>(m.radii.size());
  for (int j = 0; j < n; ++j) {
    x0[2 * j] = m.radii[j] * trig.cos_t[j][idx[j]];
    x0[2 * j + 1] = m.radii[j] * trig.sin_t[j][idx[j]];
  }
}

void validate_setup(const FlatTorus& m, std::span<const int> sizes, std::span<const double> p) {
  torus_invariants(m); // validates the model
  if (sizes.size() != m.radii.size())
    throw std::invalid_argument("conformal: one grid size per torus factor required");
  if (!p.empty()) {
    if (p.size() != 2 * m.radii.size())
      throw std::invalid_argument("conformal: Mobius parameter must have ambient dimension 2n");
    double q = 0.0;
    for (double v : p) q += v * v;
    if (q >= 1.0)
      throw std::invalid_argument("conformal: Mobius parameter must lie in the open unit ball");
  }
}

ProductGrid make_grid(const FlatTorus& m, std::span<const int> sizes) {
  return ProductGrid(std::vector<int>(sizes.begin(), sizes.end()), m.radii);
}

} // namespace

VectorGridField sample_immersion(const FlatTorus& m, std::span<const int> sizes,
                                 std::span<const double> p) {
  validate_setup(m, sizes, p);
  ProductGrid grid = make_grid(m, sizes);
  const int n = grid.factors();
  const int comps = 2 * n;
  VectorGridField X(grid, comps);
  TrigTables trig(grid);

  std::vector<int> idx(n);
  std::vector<double> x0(comps), phi(comps);
  for (long long flat = 0; flat < grid.total(); ++flat) {
    X.grid.unflatten(flat, idx);
    base_point(m, trig, idx, x0);
    if (!p.empty()) {
      mobius_apply(p, x0, phi);
      for (int c = 0; c < comps; ++c) X.component(c)[flat] = phi[c];
    } else {
      for (int c = 0; c < comps; ++c) X.component(c)[flat] = x0[c];
    }
  }
  return X;
}

GridField conformal_factor(const VectorGridField& X) {
  const ProductGrid& grid = X.grid;
  GridField u(grid);
  std::vector<double> e2u(grid.total(), 0.0), tmp(grid.total());
  const int n = grid.factors();
  for (int axis = 0; axis < n; ++axis) {
    const double inv_r = 1.0 / grid.radii()[axis];
    for (int c = 0; c < X.comps; ++c) {
      apply_derivative(grid, X.component(c), axis, 1, tmp);
      for (long long i = 0; i < grid.total(); ++i) {
        const double d = tmp[i] * inv_r;
        e2u[i] += d * d;
      }
    }
  }
  // A collapsed immersion leaves only squared roundoff in the accumulator;
  // 1e-20 cleanly separates that from any genuine conformal factor.
  for (long long i = 0; i < grid.total(); ++i) {
    const double v = e2u[i] / n;
    if (!(v > 1e-20))
      throw std::domain_error("conformal_factor: e^{2u} not strictly positive "
                              "(degenerate differential)");
    u.values[i] = 0.5 * std::log(v);
  }
  return u;
}

GridField conformal_factor_closed_form(const FlatTorus& m, std::span<const int> sizes,
                                       std::span<const double> p) {
  validate_setup(m, sizes, p);
  ProductGrid grid = make_grid(m, sizes);
  GridField u(grid);
  if (p.empty()) return u; // isometric base immersion: u = 0
  TrigTables trig(grid);
  const int n = grid.factors();
  double q = 0.0;
  for (double v : p) q += v * v;

  std::vector<int> idx(n);
  std::vector<double> x0(2 * n);
  for (long long flat = 0; flat < grid.total(); ++flat) {
    grid.unflatten(flat, idx);
    base_point(m, trig, idx, x0);
    double y2 = 0.0;
    for (int c = 0; c < 2 * n; ++c) {
      const double y = x0[c] - p[c];
      y2 += y * y;
    }
    u.values[flat] = std::log((1.0 - q) / y2);
  }
  return u;
}

ConformalityReport conformality_check_exact(const FlatTorus& m, std::span<const int> sizes,
                                            std::span<const double> p) {
  validate_setup(m, sizes, p);
  ProductGrid grid = make_grid(m, sizes);
  TrigTables trig(grid);
  const int n = grid.factors();
  const int comps = 2 * n;
  const bool with_mobius = !p.empty();
  double q = 0.0;
  for (double v : p) q += v * v;

  ConformalityReport rep;
  std::vector<int> idx(n);
  std::vector<double> x0(comps), v(comps, 0.0), frame(static_cast<size_t>(n) * comps);
  for (long long flat = 0; flat < grid.total(); ++flat) {
    grid.unflatten(flat, idx);
    base_point(m, trig, idx, x0);
    // frame of X0: e_j X0 = (-sin t_j, cos t_j) in coordinate pair j
    for (int j = 0; j < n; ++j) {
      double* fj = frame.data() + static_cast<size_t>(j) * comps;
      if (with_mobius) {
        std::fill(v.begin(), v.end(), 0.0);
        v[2 * j] = -trig.sin_t[j][idx[j]];
        v[2 * j + 1] = trig.cos_t[j][idx[j]];
        mobius_differential(p, x0, v, std::span<double>(fj, comps));
      } else {
        std::fill(fj, fj + comps, 0.0);
        fj[2 * j] = -trig.sin_t[j][idx[j]];
        fj[2 * j + 1] = trig.cos_t[j][idx[j]];
      }
    }
    double e2u = 0.0;
    for (int j = 0; j < n; ++j) {
      const double* fj = frame.data() + static_cast<size_t>(j) * comps;
      for (int c = 0; c < comps; ++c) e2u += fj[c] * fj[c];
    }
    e2u /= n;
    double closed = 1.0;
    if (with_mobius) {
      double y2 = 0.0;
      for (int c = 0; c < comps; ++c) {
        const double y = x0[c] - p[c];
        y2 += y * y;
      }
      const double sigma = (1.0 - q) / y2;
      closed = sigma * sigma;
    }
    rep.max_e2u_dev = std::max(rep.max_e2u_dev, std::abs(e2u - closed));
    for (int j = 0; j < n; ++j) {
      const double* fj = frame.data() + static_cast<size_t>(j) * comps;
      for (int k = j; k < n; ++k) {
        const double* fk = frame.data() + static_cast<size_t>(k) * comps;
        double ip = 0.0;
        for (int c = 0; c < comps; ++c) ip += fj[c] * fk[c];
        if (j == k)
          rep.max_diag_dev = std::max(rep.max_diag_dev, std::abs(ip - e2u));
        else
          rep.max_offdiag = std::max(rep.max_offdiag, std::abs(ip));
      }
    }
  }
  return rep;
}

ConformalityReport conformality_check_spectral(const FlatTorus& m, std::span<const int> sizes,
                                               std::span<const double> p) {
  VectorGridField X = sample_immersion(m, sizes, p);
  const ProductGrid& grid = X.grid;
  const int n = grid.factors();
  const int comps = X.comps;

  // Per-axis frame derivative fields of every component.
  std::vector<VectorGridField> dX;
  dX.reserve(n);
  for (int axis = 0; axis < n; ++axis) {
    VectorGridField d(grid, comps);
    const double inv_r = 1.0 / grid.radii()[axis];
    for (int c = 0; c < comps; ++c) {
      apply_derivative(grid, X.component(c), axis, 1, d.component(c));
      for (double& v : d.component(c)) v *= inv_r;
    }
    dX.push_back(std::move(d));
  }

  GridField ucf = conformal_factor_closed_form(m, sizes, p);
  ConformalityReport rep;
  for (long long i = 0; i < grid.total(); ++i) {
    double e2u = 0.0;
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < comps; ++c) {
        const double v = dX[j].component(c)[i];
        e2u += v * v;
      }
    e2u /= n;
    rep.max_e2u_dev = std::max(rep.max_e2u_dev, std::abs(e2u - std::exp(2.0 * ucf.values[i])));
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        double ip = 0.0;
        for (int c = 0; c < comps; ++c)
          ip += dX[j].component(c)[i] * dX[k].component(c)[i];
        if (j == k)
          rep.max_diag_dev = std::max(rep.max_diag_dev, std::abs(ip - e2u));
        else
          rep.max_offdiag = std::max(rep.max_offdiag, std::abs(ip));
      }
  }
  return rep;
}

double ibp_identity_check(const GridField& u) {
  const ProductGrid& grid = u.grid;
  std::vector<double> lap(grid.total()), tmp(grid.total()), grad2(grid.total(), 0.0);
  apply_laplacian(grid, u.values, lap);
  for (int axis = 0; axis < grid.factors(); ++axis) {
    apply_derivative(grid, u.values, axis, 1, tmp);
    const double inv_r2 = 1.0 / (grid.radii()[axis] * grid.radii()[axis]);
    for (long long i = 0; i < grid.total(); ++i) grad2[i] += inv_r2 * tmp[i] * tmp[i];
  }
  std::vector<double> lhs(grid.total()), rhs(grid.total());
  for (long long i = 0; i < grid.total(); ++i) {
    const double e2u = std::exp(2.0 * u.values[i]);
    lhs[i] = e2u * lap[i];
    rhs[i] = e2u * grad2[i];
  }
  const double int_lhs = grid_mean(lhs);
  const double int_rhs = grid_mean(rhs);
  return std::abs(int_lhs + 2.0 * int_rhs) / (1.0 + int_rhs);
}

ConformalFactorInequalities conformal_factor_inequalities(const FlatTorus& m, std::span<const int> sizes,
                            std::span<const double> p) {
  validate_setup(m, sizes, p);
  const int n = static_cast<int>(m.radii.size());
  if (n < 7)
    throw std::invalid_argument("conformal_factor_inequalities: the estimate requires n >= 7");
  ProductGrid grid = make_grid(m, sizes);
  TrigTables trig(grid);
  const int comps = 2 * n;

  // e^{2u} by the spectral conformal factor, streamed one line at a time:
  // X is evaluated on the fly per line, so only scalar fields are
  // materialized even on large product grids.
  std::vector<double> e2u(grid.total(), 0.0);
  {
    std::vector<int> idx(n);
    for (int axis = 0; axis < n; ++axis) {
      const int N = grid.sizes()[axis];
      const long long stride = grid.stride(axis);
      const std::vector<double>& D = differentiation_matrix(N, 1);
      const double inv_r = 1.0 / grid.radii()[axis];
      const long long block = static_cast<long long>(N) * stride;
      const long long nblocks = grid.total() / block;
      std::vector<double> line(static_cast<size_t>(N) * comps);
      std::vector<double> x0(comps), phi(comps);
      for (long long blk = 0; blk < nblocks; ++blk) {
        for (long long off = 0; off < stride; ++off) {
          const long long base = blk * block + off;
          grid.unflatten(base, idx);
          for (int k = 0; k < N; ++k) {
            idx[axis] = k;
            base_point(m, trig, idx, x0);
            if (!p.empty()) {
              mobius_apply(p, x0, phi);
              for (int c = 0; c < comps; ++c) line[static_cast<size_t>(c) * N + k] = phi[c];
            } else {
              for (int c = 0; c < comps; ++c) line[static_cast<size_t>(c) * N + k] = x0[c];
            }
          }
          for (int c = 0; c < comps; ++c) {
            const double* lc = line.data() + static_cast<size_t>(c) * N;
            for (int a = 0; a < N; ++a) {
              const double* row = D.data() + static_cast<size_t>(a) * N;
              double acc = 0.0;
              for (int k = 0; k < N; ++k) acc += row[k] * lc[k];
              acc *= inv_r;
              e2u[base + a * stride] += acc * acc;
            }
          }
        }
      }
    }
    for (double& v : e2u) v /= n;
  }

  GridField u(grid);
  for (long long i = 0; i < grid.total(); ++i) {
    if (!(e2u[i] > 0.0))
      throw std::domain_error("conformal_factor_inequalities: e^{2u} not strictly positive");
    u.values[i] = 0.5 * std::log(e2u[i]);
  }

  ConformalFactorInequalities rep;
  {
    GridField ucf = conformal_factor_closed_form(m, sizes, p);
    for (long long i = 0; i < grid.total(); ++i)
      rep.e2u_deviation =
          std::max(rep.e2u_deviation, std::abs(e2u[i] - std::exp(2.0 * ucf.values[i])));
  }

  std::vector<double> grad2(grid.total(), 0.0), tmp(grid.total());
  for (int axis = 0; axis < n; ++axis) {
    apply_derivative(grid, u.values, axis, 1, tmp);
    const double inv_r2 = 1.0 / (grid.radii()[axis] * grid.radii()[axis]);
    for (long long i = 0; i < grid.total(); ++i) grad2[i] += inv_r2 * tmp[i] * tmp[i];
  }

  const ModelData md = torus_invariants(m);
  rep.kappa = md.invariants.mean_curv_sq + 1.0;

  std::vector<double> e4u(grid.total()), e2ug(grid.total());
  for (long long i = 0; i < grid.total(); ++i) {
    e4u[i] = e2u[i] * e2u[i];
    e2ug[i] = e2u[i] * grad2[i];
  }
  rep.mean_e2u = grid_mean(e2u);
  rep.mean_e4u = grid_mean(e4u);
  rep.mean_grad = grid_mean(e2ug);

  const double grad_term = (n - 6.0) / n * rep.mean_grad;
  rep.slack_main = rep.kappa * rep.kappa - grad_term - rep.kappa * rep.mean_e2u;
  rep.slack_intermediate = rep.kappa * rep.mean_e2u - grad_term - rep.mean_e4u;
  return rep;
}

} // namespace paneitz
