#pragma once

#include <span>

#include "paneitz/curvature.hpp"
#include "paneitz/rational.hpp"

namespace paneitz {

/// Coefficients of the Branson-Paneitz operator
///   P f = Delta^2 f - div((a_n R Id + b_n Ric) df) + (n-4)/2 Q f
/// on an n-manifold, carried both in floating point and as exact rationals.
struct PaneitzCoefficients {
  int n = 0;
  bool extrapolated = false; // true for n in {3,4}, outside the operator's natural range
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  Rational a_exact, b_exact, c_exact, d_exact;
};

/// Evaluates the four coefficient formulas
///   a_n = ((n-2)^2 + 4) / (2(n-1)(n-2)),  b_n = -4/(n-2),
///   c_n = -2/(n-2)^2,  d_n = (n^3 - 4n^2 + 16n - 16) / (8(n-1)^2(n-2)^2).
/// Defined for n >= 5; n in {3,4} is accepted only with allow_extrapolated
/// (probing outside the operator's range); n <= 2 is rejected.
PaneitzCoefficients coefficients(int n, bool allow_extrapolated = false);

/// Q-curvature evaluated via both printed forms:
///   form_a = c_n |Ric|^2 + d_n R^2 - Delta R / (2(n-1))
///   form_b = (n^2-4)/(8n(n-1)^2) R^2 - 2/(n-2)^2 |E|^2 - Delta R / (2(n-1))
/// The two forms agree identically; their floating-point values are kept
/// separately as a cross-check.
struct QValue {
  double q = 0.0;
  double form_a = 0.0;
  double form_b = 0.0;
};

QValue q_curvature(const CurvatureData& data);
QValue q_curvature(const CurvatureData& data, const PaneitzCoefficients& coeffs);

/// One factor's contribution to a joint Laplacian eigenfunction on a
/// parallel-Ricci product: its Laplacian eigenvalue and the Ricci eigenvalue
/// on that factor.
struct FactorMode {
  double mu = 0.0;
  double ricci = 0.0;
};

/// Action of P on a joint eigenfunction of the factor Laplacians:
///   lambda_P = s^2 + a_n R s + b_n sum_i rho_i mu_i + (n-4) Q / 2,  s = sum_i mu_i.
/// Valid only for parallel-Ricci data with spatially constant R and Q.
double paneitz_symbol(int n, const PaneitzCoefficients& coeffs, const CurvatureData& data,
                      std::span<const FactorMode> factor_modes, const QValue& q);

} // namespace paneitz
