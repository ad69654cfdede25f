#pragma once

#include <vector>

namespace paneitz {

/// Ambient space form R^{n+p}(c): Euclidean space (c=0), the unit sphere
/// (c=1) or hyperbolic space (c=-1).
struct SpaceFormTag {
  int c = 0;           // ambient sectional curvature, one of {-1, 0, +1}
  int ambient_dim = 0; // n + p

  void validate(int intrinsic_dim) const;
};

/// Extrinsic package of an immersed submanifold: dimension, squared mean
/// curvature |H|^2, squared second fundamental form |h|^2, ambient curvature
/// and volume. Volume may be 1 for per-unit-volume work on homogeneous models.
struct ImmersionInvariants {
  int n = 0;
  double mean_curv_sq = 0.0; // |H|^2
  double second_ff_sq = 0.0; // |h|^2
  int c = 0;
  double volume = 1.0;

  void validate() const;
};

struct RicciLevel {
  double value = 0.0;
  long long multiplicity = 0;
};

/// Intrinsic curvature package for a homogeneous / parallel-Ricci model.
/// The Ricci tensor is carried as its eigenvalue spectrum; every model in
/// the catalog has parallel, simultaneously diagonalizable Ricci.
struct CurvatureData {
  int n = 0;
  double scalar = 0.0;                    // R
  std::vector<RicciLevel> ricci_spectrum; // (rho_i, m_i), sum m_i = n
  double ric_norm_sq = 0.0;               // |Ric|^2 = sum m_i rho_i^2
  double traceless_norm_sq = 0.0;         // |E|^2 = |Ric|^2 - R^2/n
  double lap_scalar = 0.0;                // Laplacian of R
  bool parallel_ricci = false;

  void validate() const;
};

/// Builds a CurvatureData from a Ricci spectrum, deriving R, |Ric|^2 and
/// |E|^2, and validates the internal consistency constraints.
CurvatureData make_curvature_data(int n, std::vector<RicciLevel> ricci_spectrum,
                                  double lap_scalar, bool parallel_ricci);

/// Umbilicity test: |h|^2 - n|H|^2 <= 1e-10 * max(1, n|H|^2). Catalog models
/// are exact, so any slack beyond this signals a construction bug.
bool is_umbilic(const ImmersionInvariants& inv);

/// Gauss equation: R = n(n-1)(|H|^2 + c) - (|h|^2 - n|H|^2).
double gauss_scalar(const ImmersionInvariants& inv);

struct ScalarBound {
  double bound = 0.0;
  bool is_equality = false;
};

/// Scalar curvature bound R <= n(n-1)(|H|^2 + c), equality iff umbilic.
ScalarBound scalar_upper_bound(const ImmersionInvariants& inv);

/// Space-form curvature package: all Ricci eigenvalues (n-1)*kappa,
/// R = n(n-1)*kappa, |E|^2 = 0, parallel Ricci.
CurvatureData einstein_curvature(int n, double kappa);

} // namespace paneitz
