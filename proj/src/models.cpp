#include "paneitz/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paneitz {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1); // each prefix is itself a binomial, so exact
    if (acc > static_cast<__int128>(INT64_MAX))
      throw std::overflow_error("binomial: result exceeds 64 bits");
  }
  return static_cast<long long>(acc);
}

} // namespace

long long sphere_eigenspace_dim(int m, int k) {
  if (m < 1 || k < 0) throw std::invalid_argument("sphere_eigenspace_dim: bad arguments");
  if (k == 0) return 1;
  return binomial(k + m - 1, k) + binomial(k + m - 2, k - 1);
}

double unit_sphere_volume(int n) {
  if (n < 1) throw std::invalid_argument("unit_sphere_volume: n must be >= 1");
  const double half = 0.5 * (n + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double FactorSpectrum::eigenvalue(int level) const {
  if (level < 0) throw std::invalid_argument("FactorSpectrum: level must be >= 0");
  const double rr = radius * radius;
  if (kind == Kind::Circle) return static_cast<double>(level) * level / rr;
  return static_cast<double>(level) * (level + dim - 1) / rr;
}

long long FactorSpectrum::multiplicity(int level) const {
  if (level < 0) throw std::invalid_argument("FactorSpectrum: level must be >= 0");
  if (kind == Kind::Circle) return level == 0 ? 1 : 2;
  return sphere_eigenspace_dim(dim, level);
}

ModelData sphere_invariants(const GeodesicSphere& m) {
  if (m.n < 2) throw std::invalid_argument("GeodesicSphere: n must be >= 2");
  if (m.p < 1) throw std::invalid_argument("GeodesicSphere: codimension must be >= 1");
  if (!(m.r > 0.0)) throw std::invalid_argument("GeodesicSphere: radius must be > 0");
  const SpaceFormTag ambient{m.c, m.n + m.p};
  ambient.validate(m.n);

  // Intrinsic (Euclidean) radius and |H|^2 per ambient.
  double rho = 0.0, h2 = 0.0;
  switch (m.c) {
    case 0:
      rho = m.r;
      h2 = 1.0 / (m.r * m.r);
      break;
    case 1: {
      constexpr double half_pi = std::numbers::pi / 2.0;
      if (m.r > half_pi * (1.0 + 1e-12))
        throw std::invalid_argument("GeodesicSphere: for c = 1 the radius must satisfy r <= pi/2");
      rho = std::sin(m.r);
      const double cot = std::cos(m.r) / std::sin(m.r);
      h2 = cot * cot;
      break;
    }
    case -1: {
      rho = std::sinh(m.r);
      const double coth = std::cosh(m.r) / std::sinh(m.r);
      h2 = coth * coth;
      break;
    }
  }
  const double kappa = h2 + m.c; // == 1/rho^2

  ModelData out;
  out.invariants = {m.n, h2, m.n * h2, m.c, std::pow(rho, m.n) * unit_sphere_volume(m.n)};
  out.invariants.validate();
  out.curvature = einstein_curvature(m.n, kappa);
  out.spectrum.factors.push_back(
      {FactorSpectrum::Kind::Sphere, m.n, rho, (m.n - 1) * kappa});
  return out;
}

ProductSphere make_product_sphere(int a, int b, double r1) {
  if (!(r1 > 0.0 && r1 < 1.0))
    throw std::invalid_argument("ProductSphere: r1 must lie in (0, 1)");
  return {a, b, r1, std::sqrt(1.0 - r1 * r1)};
}

ModelData product_invariants(const ProductSphere& m) {
  if (m.a < 1 || m.b < 1)
    throw std::invalid_argument("ProductSphere: factor dimensions must be >= 1");
  if (!(m.r1 > 0.0 && m.r1 < 1.0) || !(m.r2 > 0.0 && m.r2 < 1.0))
    throw std::invalid_argument("ProductSphere: radii must lie in (0, 1)");
  if (std::abs(m.r1 * m.r1 + m.r2 * m.r2 - 1.0) > 1e-14)
    throw std::invalid_argument("ProductSphere: requires r1^2 + r2^2 = 1");

  const int n = m.a + m.b;
  // Principal curvatures r2/r1 (mult a) and -r1/r2 (mult b).
  const double lam1 = m.r2 / m.r1;
  const double lam2 = -m.r1 / m.r2;
  const double trace_h = m.a * lam1 + m.b * lam2; // n H
  const double h2 = m.a * lam1 * lam1 + m.b * lam2 * lam2;
  const double mean_sq = (trace_h / n) * (trace_h / n);

  const double rho1 = (m.a - 1) / (m.r1 * m.r1);
  const double rho2 = (m.b - 1) / (m.r2 * m.r2);

  ModelData out;
  out.invariants = {n, mean_sq, h2, 1,
                    std::pow(m.r1, m.a) * std::pow(m.r2, m.b) * unit_sphere_volume(m.a) *
                        unit_sphere_volume(m.b)};
  out.invariants.validate();
  out.curvature = make_curvature_data(n, {{rho1, m.a}, {rho2, m.b}}, 0.0, true);
  out.spectrum.factors.push_back({FactorSpectrum::Kind::Sphere, m.a, m.r1, rho1});
  out.spectrum.factors.push_back({FactorSpectrum::Kind::Sphere, m.b, m.r2, rho2});
  return out;
}

ModelData torus_invariants(const FlatTorus& m) {
  const int n = static_cast<int>(m.radii.size());
  if (n < 2) throw std::invalid_argument("FlatTorus: needs at least 2 circle factors");
  double sum_sq = 0.0, inv_sq = 0.0, vol = 1.0;
  for (double r : m.radii) {
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("FlatTorus: radii must lie in (0, 1)");
    sum_sq += r * r;
    inv_sq += 1.0 / (r * r);
    vol *= 2.0 * std::numbers::pi * r;
  }
  if (std::abs(sum_sq - 1.0) > 1e-14)
    throw std::invalid_argument("FlatTorus: requires sum r_i^2 = 1");

  // |H|^2 + 1 = (1/n^2) sum 1/r_i^2 >= 1 by Cauchy-Schwarz; clamp roundoff.
  const double mean_sq = std::max(0.0, inv_sq / (static_cast<double>(n) * n) - 1.0);
  // Gauss equation with R = 0 determines |h|^2.
  const double h2 = n * mean_sq + n * (n - 1) * (mean_sq + 1.0);

  ModelData out;
  out.invariants = {n, mean_sq, h2, 1, vol};
  out.invariants.validate();
  out.curvature = make_curvature_data(n, {{0.0, n}}, 0.0, true);
  for (double r : m.radii)
    out.spectrum.factors.push_back({FactorSpectrum::Kind::Circle, 1, r, 0.0});
  return out;
}

ModelData model_data(const ModelManifold& m) {
  return std::visit(
      [](const auto& model) { return [&] {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, GeodesicSphere>) return sphere_invariants(model);
        else if constexpr (std::is_same_v<T, ProductSphere>) return product_invariants(model);
        else return torus_invariants(model);
      }(); },
      m);
}

int model_ambient_curvature(const ModelManifold& m) {
  if (const auto* s = std::get_if<GeodesicSphere>(&m)) return s->c;
  return 1; // product spheres and flat tori live in the unit sphere
}

} // namespace paneitz
