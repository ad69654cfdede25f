#include "paneitz/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace paneitz {

namespace {
constexpr double kUmbilicTol = 1e-10;
} // namespace

void SpaceFormTag::validate(int intrinsic_dim) const {
  if (c != -1 && c != 0 && c != 1)
    throw std::invalid_argument("SpaceFormTag: c must be one of {-1, 0, +1}");
  if (ambient_dim <= intrinsic_dim)
    throw std::invalid_argument("SpaceFormTag: ambient dimension must exceed intrinsic dimension");
}

void ImmersionInvariants::validate() const {
  if (n < 2) throw std::invalid_argument("ImmersionInvariants: n must be >= 2");
  if (c != -1 && c != 0 && c != 1)
    throw std::invalid_argument("ImmersionInvariants: c must be one of {-1, 0, +1}");
  if (!(mean_curv_sq >= 0.0)) throw std::invalid_argument("ImmersionInvariants: |H|^2 must be >= 0");
  if (!(volume > 0.0)) throw std::invalid_argument("ImmersionInvariants: volume must be > 0");
  // Cauchy-Schwarz on the trace of h.
  if (second_ff_sq < n * mean_curv_sq - 1e-12 * std::max(1.0, n * mean_curv_sq))
    throw std::invalid_argument("ImmersionInvariants: |h|^2 < n|H|^2 violates Cauchy-Schwarz");
  if (!(mean_curv_sq + c > 0.0))
    throw std::invalid_argument("ImmersionInvariants: |H|^2 + c must be positive for catalog models");
}

void CurvatureData::validate() const {
  if (n < 2) throw std::invalid_argument("CurvatureData: n must be >= 2");
  long long total = 0;
  double trace = 0.0, sq = 0.0;
  for (const auto& lvl : ricci_spectrum) {
    if (lvl.multiplicity <= 0)
      throw std::invalid_argument("CurvatureData: Ricci multiplicities must be positive");
    total += lvl.multiplicity;
    trace += static_cast<double>(lvl.multiplicity) * lvl.value;
    sq += static_cast<double>(lvl.multiplicity) * lvl.value * lvl.value;
  }
  if (total != n) throw std::invalid_argument("CurvatureData: Ricci multiplicities must sum to n");
  const double scale = std::max(1.0, std::abs(scalar));
  if (std::abs(trace - scalar) > 1e-12 * scale)
    throw std::invalid_argument("CurvatureData: Ricci trace does not match scalar curvature");
  if (std::abs(sq - ric_norm_sq) > 1e-12 * std::max(1.0, sq))
    throw std::invalid_argument("CurvatureData: |Ric|^2 inconsistent with spectrum");
  if (traceless_norm_sq < -1e-12 * std::max(1.0, ric_norm_sq))
    throw std::invalid_argument("CurvatureData: |E|^2 must be nonnegative");
}

CurvatureData make_curvature_data(int n, std::vector<RicciLevel> ricci_spectrum,
                                  double lap_scalar, bool parallel_ricci) {
  CurvatureData data;
  data.n = n;
  data.ricci_spectrum = std::move(ricci_spectrum);
  double trace = 0.0, sq = 0.0;
  for (const auto& lvl : data.ricci_spectrum) {
    trace += static_cast<double>(lvl.multiplicity) * lvl.value;
    sq += static_cast<double>(lvl.multiplicity) * lvl.value * lvl.value;
  }
  data.scalar = trace;
  data.ric_norm_sq = sq;
  data.traceless_norm_sq = std::max(0.0, sq - trace * trace / n);
  data.lap_scalar = lap_scalar;
  data.parallel_ricci = parallel_ricci;
  data.validate();
  return data;
}

bool is_umbilic(const ImmersionInvariants& inv) {
  const double gap = inv.second_ff_sq - inv.n * inv.mean_curv_sq;
  return gap <= kUmbilicTol * std::max(1.0, inv.n * inv.mean_curv_sq);
}

double gauss_scalar(const ImmersionInvariants& inv) {
  inv.validate();
  const double kappa = inv.mean_curv_sq + inv.c;
  return inv.n * (inv.n - 1) * kappa - (inv.second_ff_sq - inv.n * inv.mean_curv_sq);
}

ScalarBound scalar_upper_bound(const ImmersionInvariants& inv) {
  inv.validate();
  return {inv.n * (inv.n - 1) * (inv.mean_curv_sq + inv.c), is_umbilic(inv)};
}

CurvatureData einstein_curvature(int n, double kappa) {
  if (n < 2) throw std::invalid_argument("einstein_curvature: n must be >= 2");
  return make_curvature_data(n, {{(n - 1) * kappa, n}}, 0.0, true);
}

} // namespace paneitz
