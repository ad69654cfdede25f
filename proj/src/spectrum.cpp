#include "paneitz/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace paneitz {

namespace {

struct RawMode {
  double value = 0.0;
  long long multiplicity = 0;
  std::vector<int> levels;
};

// Recursively enumerates factor-level tuples with total Laplacian eigenvalue
// at most `cutoff`, evaluating the Paneitz symbol per tuple.
void enumerate_modes(const SpectrumSource& source, const CurvatureData& data,
                     const QValue& q, const PaneitzCoefficients& coeffs, double cutoff,
                     long long max_modes, std::vector<RawMode>& out) {
  const int nf = static_cast<int>(source.factors.size());
  std::vector<int> levels(nf, 0);
  std::vector<FactorMode> modes(nf);
  long long visited = 0;

  auto rec = [&](auto&& self, int j, double s_acc, long long mult_acc) -> void {
    if (j == nf) {
      if (++visited > max_modes)
        throw NumericalError("enumerate_spectrum: mode budget exhausted");
      RawMode rm;
      rm.value = paneitz_symbol(data.n, coeffs, data, modes, q);
      rm.multiplicity = mult_acc;
      rm.levels = levels;
      out.push_back(std::move(rm));
      return;
    }
    const auto& f = source.factors[j];
    for (int k = 0;; ++k) {
      const double mu = f.eigenvalue(k);
      if (s_acc + mu > cutoff) break; // eigenvalues increase with the level
      levels[j] = k;
      modes[j] = {mu, f.ricci};
      self(self, j + 1, s_acc + mu, mult_acc * f.multiplicity(k));
    }
    levels[j] = 0;
  };
  rec(rec, 0, 0.0, 1);
}

std::vector<SpectrumSlice> merge_sorted(std::vector<RawMode> raw, double rel_tol) {
  std::sort(raw.begin(), raw.end(), [](const RawMode& x, const RawMode& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.levels < y.levels;
  });
  std::vector<SpectrumSlice> slices;
  for (auto& rm : raw) {
    if (!slices.empty() &&
        std::abs(rm.value - slices.back().value) <=
            rel_tol * std::max(1.0, std::abs(slices.back().value))) {
      slices.back().multiplicity += rm.multiplicity;
    } else {
      slices.push_back({rm.value, rm.multiplicity, std::move(rm.levels)});
    }
  }
  return slices;
}

} // namespace

SpectrumResult enumerate_spectrum(const SpectrumSource& source, const CurvatureData& data,
                                  const QValue& q, const PaneitzCoefficients& coeffs,
                                  long long count, const EnumerationOptions& opts) {
  if (count < 2)
    throw std::invalid_argument("enumerate_spectrum: count must be >= 2");
  if (source.factors.empty())
    throw std::invalid_argument("enumerate_spectrum: no spectrum factors");
  if (!data.parallel_ricci)
    throw std::invalid_argument("enumerate_spectrum: requires parallel-Ricci data");

  double rho_max = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& f : source.factors) {
    rho_max = std::max(rho_max, f.ricci);
    min_gap = std::min(min_gap, f.eigenvalue(1));
  }
  const double aR = coeffs.a * data.scalar;
  const double lin = aR + coeffs.b * rho_max;   // slope of the certified lower bound
  const double constant = 0.5 * (data.n - 4.0) * q.q;
  const double vertex = std::max(0.0, -lin / 2.0);

  auto lower_bound_at = [&](double s) { return s * s + lin * s + constant; };

  double cutoff = opts.initial_cutoff > 0.0
                      ? opts.initial_cutoff
                      : std::max({4.0 * vertex, 4.0 * min_gap, 16.0});
  for (;;) {
    std::vector<RawMode> raw;
    enumerate_modes(source, data, q, coeffs, cutoff, opts.max_modes, raw);
    auto slices = merge_sorted(std::move(raw), opts.merge_rel_tol);

    // Multiplicity-expanded value of the count-th eigenvalue, if present.
    long long expanded = 0;
    double target = 0.0;
    bool have_target = false;
    for (const auto& s : slices) {
      expanded += s.multiplicity;
      if (expanded >= count) {
        target = s.value;
        have_target = true;
        break;
      }
    }

    // A slice is complete only if no unenumerated mode could merge into it:
    // certify values below the bound by more than the dedup window.
    const double bound = lower_bound_at(cutoff);
    auto certified_value = [&](double v) {
      return v < bound - opts.merge_rel_tol * std::max(1.0, std::abs(v));
    };
    if (have_target && cutoff >= vertex && certified_value(target)) {
      SpectrumResult result;
      result.certificate.cutoff = cutoff;
      result.certificate.lower_bound_at_cutoff = bound;
      long long certified = 0;
      long long covered = 0;
      for (auto& s : slices) {
        if (!certified_value(s.value)) break;
        certified += s.multiplicity;
        if (covered < count) { // report the first `count`, certify the rest silently
          covered += s.multiplicity;
          result.slices.push_back(std::move(s));
        }
      }
      result.certificate.certified_count = certified;
      return result;
    }
    cutoff *= 2.0;
  }
}

double second_eigenvalue(std::span<const SpectrumSlice> slices, bool distinct) {
  if (distinct) {
    if (slices.size() < 2)
      throw std::invalid_argument("second_eigenvalue: fewer than 2 distinct eigenvalues");
    return slices[1].value;
  }
  long long seen = 0;
  for (const auto& s : slices) {
    seen += s.multiplicity;
    if (seen >= 2) return s.value;
  }
  throw std::invalid_argument("second_eigenvalue: fewer than 2 certified eigenvalues");
}

namespace {

double discrete_symbol(int k, int N, double r) {
  const double x = 2.0 * std::numbers::pi * k / N;
  const double scale = N / (2.0 * std::numbers::pi * r);
  return (2.0 - 2.0 * std::cos(x)) * scale * scale;
}

// Nonnegative mode tuples with sum k_i^2 / r_i^2 <= cutoff; multiplicity
// 2^{#nonzero entries} accounts for the +-k sign choices.
struct TorusMode {
  std::vector<int> k;
  long long multiplicity;
};

std::vector<TorusMode> torus_modes_below(const std::vector<double>& radii, double cutoff) {
  const int n = static_cast<int>(radii.size());
  std::vector<TorusMode> out;
  std::vector<int> k(n, 0);
  auto rec = [&](auto&& self, int j, double acc, long long mult) -> void {
    if (j == n) {
      out.push_back({k, mult});
      return;
    }
    for (int kj = 0;; ++kj) {
      const double v = acc + static_cast<double>(kj) * kj / (radii[j] * radii[j]);
      if (v > cutoff) break;
      k[j] = kj;
      self(self, j + 1, v, mult * (kj == 0 ? 1 : 2));
    }
    k[j] = 0;
  };
  rec(rec, 0, 0.0, 1);
  return out;
}

// Smallest continuum cutoff whose mode set carries at least `count`
// eigenvalues (with a safety margin).
double torus_cutoff_for_count(const std::vector<double>& radii, long long count) {
  double cutoff = 4.0;
  for (;;) {
    long long total = 0;
    for (const auto& m : torus_modes_below(radii, cutoff)) total += m.multiplicity;
    if (total >= count + 4) return cutoff;
    cutoff *= 2.0;
  }
}

} // namespace

std::vector<double> flat_torus_grid_oracle(const FlatTorus& m, int grid_points_per_circle,
                                           long long count) {
  if (grid_points_per_circle < 8 || grid_points_per_circle % 2 != 0)
    throw std::invalid_argument("flat_torus_grid_oracle: grid size must be even and >= 8");
  if (count < 1) throw std::invalid_argument("flat_torus_grid_oracle: count must be >= 1");
  torus_invariants(m); // validates the model
  const int N = grid_points_per_circle;

  // Modes are capped at the grid Nyquist level; the discrete symbol is
  // monotone in k on [0, N/2], so the continuum cutoff also bounds the
  // discrete enumeration from above.
  const double cutoff = torus_cutoff_for_count(m.radii, count);
  std::vector<double> vals;
  for (const auto& mode : torus_modes_below(m.radii, cutoff)) {
    bool in_band = true;
    double mu = 0.0;
    for (size_t j = 0; j < mode.k.size(); ++j) {
      if (mode.k[j] > N / 2) { in_band = false; break; }
      mu += discrete_symbol(mode.k[j], N, m.radii[j]);
    }
    if (!in_band) continue;
    for (long long i = 0; i < mode.multiplicity; ++i) vals.push_back(mu * mu);
  }
  std::sort(vals.begin(), vals.end());
  if (static_cast<long long>(vals.size()) > count) vals.resize(count);
  return vals;
}

std::vector<double> flat_torus_grid_oracle_extrapolated(const FlatTorus& m, int base_grid,
                                                        long long count) {
  if (base_grid < 8 || base_grid % 2 != 0)
    throw std::invalid_argument("flat_torus_grid_oracle_extrapolated: grid size must be even and >= 8");
  torus_invariants(m);
  const double cutoff = torus_cutoff_for_count(m.radii, count);
  std::vector<double> vals;
  for (const auto& mode : torus_modes_below(m.radii, cutoff)) {
    double lam[3];
    for (int lvl = 0; lvl < 3; ++lvl) {
      const int N = base_grid << lvl;
      double mu = 0.0;
      for (size_t j = 0; j < mode.k.size(); ++j)
        mu += discrete_symbol(mode.k[j], N, m.radii[j]);
      lam[lvl] = mu * mu;
    }
    // Richardson in 1/N^2: eliminate the N^-2 then the N^-4 error terms.
    const double e1a = (4.0 * lam[1] - lam[0]) / 3.0;
    const double e1b = (4.0 * lam[2] - lam[1]) / 3.0;
    const double e2 = (16.0 * e1b - e1a) / 15.0;
    for (long long i = 0; i < mode.multiplicity; ++i) vals.push_back(e2);
  }
  std::sort(vals.begin(), vals.end());
  if (static_cast<long long>(vals.size()) > count) vals.resize(count);
  return vals;
}

} // namespace paneitz
