#include "paneitz/paneitz_op.hpp"

#include <cmath>
#include <stdexcept>

namespace paneitz {

PaneitzCoefficients coefficients(int n, bool allow_extrapolated) {
  if (n <= 2)
    throw std::invalid_argument("coefficients: formulas are singular for n <= 2");
  if (n < 5 && !allow_extrapolated)
    throw std::invalid_argument("coefficients: operator is defined for n >= 5 "
                                "(pass allow_extrapolated to probe n = 3, 4)");
  PaneitzCoefficients co;
  co.n = n;
  co.extrapolated = n < 5;
  const Rational N(n);
  co.a_exact = ((N - 2) * (N - 2) + 4) / (Rational(2) * (N - 1) * (N - 2));
  co.b_exact = Rational(-4) / (N - 2);
  co.c_exact = Rational(-2) / ((N - 2) * (N - 2));
  co.d_exact = (N * N * N - Rational(4) * N * N + Rational(16) * N - 16) /
               (Rational(8) * (N - 1) * (N - 1) * (N - 2) * (N - 2));
  co.a = co.a_exact.to_double();
  co.b = co.b_exact.to_double();
  co.c = co.c_exact.to_double();
  co.d = co.d_exact.to_double();
  return co;
}

QValue q_curvature(const CurvatureData& data) {
  return q_curvature(data, coefficients(data.n));
}

QValue q_curvature(const CurvatureData& data, const PaneitzCoefficients& coeffs) {
  data.validate();
  if (coeffs.n != data.n)
    throw std::invalid_argument("q_curvature: coefficient dimension mismatch");
  const double n = data.n;
  const double lap_term = data.lap_scalar / (2.0 * (n - 1.0));
  QValue q;
  q.form_a = coeffs.c * data.ric_norm_sq + coeffs.d * data.scalar * data.scalar - lap_term;
  q.form_b = (n * n - 4.0) / (8.0 * n * (n - 1.0) * (n - 1.0)) * data.scalar * data.scalar -
             2.0 / ((n - 2.0) * (n - 2.0)) * data.traceless_norm_sq - lap_term;
  q.q = q.form_b;
  return q;
}

double paneitz_symbol(int n, const PaneitzCoefficients& coeffs, const CurvatureData& data,
                      std::span<const FactorMode> factor_modes, const QValue& q) {
  if (!data.parallel_ricci)
    throw std::invalid_argument("paneitz_symbol: requires parallel-Ricci data");
  if (data.lap_scalar != 0.0)
    throw std::invalid_argument("paneitz_symbol: requires spatially constant scalar curvature");
  if (coeffs.n != n || data.n != n)
    throw std::invalid_argument("paneitz_symbol: dimension mismatch");
  double s = 0.0, ric_weighted = 0.0;
  for (const auto& mode : factor_modes) {
    if (mode.mu < 0.0)
      throw std::invalid_argument("paneitz_symbol: factor Laplacian eigenvalues must be >= 0");
    s += mode.mu;
    ric_weighted += mode.ricci * mode.mu;
  }
  return s * s + coeffs.a * data.scalar * s + coeffs.b * ric_weighted +
         0.5 * (n - 4.0) * q.q;
}

} // namespace paneitz
