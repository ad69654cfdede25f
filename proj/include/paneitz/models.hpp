#pragma once

#include <variant>
#include <vector>

#include "paneitz/curvature.hpp"

namespace paneitz {

/// Totally umbilical round sphere of dimension n inside R^{n+p}(c). The
/// radius parameter r is the geodesic radius for c = +-1 and the Euclidean
/// radius for c = 0.
struct GeodesicSphere {
  int n = 0;
  int p = 1;
  int c = 0;
  double r = 1.0;
};

/// S^a(r1) x S^b(r2) embedded as a hypersurface of the unit sphere
/// S^{a+b+1}(1), r1^2 + r2^2 = 1. The standard non-umbilic strict-inequality
/// family; minimal exactly at r1^2 = a/n.
struct ProductSphere {
  int a = 0;
  int b = 0;
  double r1 = 0.0;
  double r2 = 0.0;
};

ProductSphere make_product_sphere(int a, int b, double r1);

/// Flat torus x = (r_1 e^{i t_1}, ..., r_n e^{i t_n}) in S^{2n-1}(1),
/// sum r_i^2 = 1. Curvature-flat, so Q = 0 and P = Delta^2.
struct FlatTorus {
  std::vector<double> radii;
};

/// One closed-form factor spectrum: a round sphere S^dim(radius) or a circle
/// of radius `radius`, together with the factor's Ricci eigenvalue.
struct FactorSpectrum {
  enum class Kind { Sphere, Circle };
  Kind kind = Kind::Circle;
  int dim = 1;
  double radius = 1.0;
  double ricci = 0.0;

  double eigenvalue(int level) const;
  long long multiplicity(int level) const;
};

struct SpectrumSource {
  std::vector<FactorSpectrum> factors;
};

/// Everything a model exports: extrinsic invariants, intrinsic curvature and
/// the factor Laplacian spectra.
struct ModelData {
  ImmersionInvariants invariants;
  CurvatureData curvature;
  SpectrumSource spectrum;
};

ModelData sphere_invariants(const GeodesicSphere& m);
ModelData product_invariants(const ProductSphere& m);
ModelData torus_invariants(const FlatTorus& m);

using ModelManifold = std::variant<GeodesicSphere, ProductSphere, FlatTorus>;

ModelData model_data(const ModelManifold& m);
int model_ambient_curvature(const ModelManifold& m);

/// dim of the space of degree-k spherical harmonics on S^m:
/// C(k+m-1, k) + C(k+m-2, k-1); reduces to 1 (k = 0) and 2 (k >= 1) on S^1.
long long sphere_eigenspace_dim(int m, int k);

/// Volume of the unit n-sphere, 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double unit_sphere_volume(int n);

} // namespace paneitz
