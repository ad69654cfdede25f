#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "paneitz/models.hpp"
#include "paneitz/paneitz_op.hpp"

namespace paneitz {

/// Thrown when a computation cannot certify its result (enumeration budget
/// exhausted, solver nonconvergence). Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One Paneitz eigenvalue with its multiplicity and a representative mode
/// tuple (per-factor Laplacian level indices, lexicographically smallest).
struct SpectrumSlice {
  double value = 0.0;
  long long multiplicity = 0;
  std::vector<int> modes;
};

/// Completeness certificate for a truncated enumeration: every mode with
/// total Laplacian eigenvalue above `cutoff` has a Paneitz eigenvalue of at
/// least `lower_bound_at_cutoff`, which strictly exceeds the largest
/// certified eigenvalue.
struct EnumerationCertificate {
  double cutoff = 0.0;
  double lower_bound_at_cutoff = 0.0;
  long long certified_count = 0;
};

struct SpectrumResult {
  std::vector<SpectrumSlice> slices;
  EnumerationCertificate certificate;
};

struct EnumerationOptions {
  long long max_modes = 20'000'000; // tuple budget before giving up
  double merge_rel_tol = 1e-9;      // dedup tolerance for equal symbol values
  double initial_cutoff = 0.0;      // 0 = choose automatically
};

/// Enumerates the first `count` Paneitz eigenvalues (with multiplicity) of a
/// parallel-Ricci product model from its factor Laplacian spectra, certifying
/// completeness via the quadratic lower bound
///   lambda_P >= s^2 + (a_n R + b_n rho_max) s + (n-4) Q / 2
/// which is increasing beyond its vertex since b_n < 0 and rho_i <= rho_max.
SpectrumResult enumerate_spectrum(const SpectrumSource& source, const CurvatureData& data,
                                  const QValue& q, const PaneitzCoefficients& coeffs,
                                  long long count, const EnumerationOptions& opts = {});

/// Second element of the nondecreasing multiplicity-expanded eigenvalue list;
/// with `distinct` set, the second distinct value instead.
double second_eigenvalue(std::span<const SpectrumSlice> slices, bool distinct = false);

/// Independent flat-torus check: first `count` eigenvalues of the squared
/// discrete Laplacian on an N-point-per-circle periodic grid, using the exact
/// trigonometric symbol (2 - 2 cos(2 pi k / N)) (N / (2 pi r_i))^2 per
/// direction.
std::vector<double> flat_torus_grid_oracle(const FlatTorus& m, int grid_points_per_circle,
                                           long long count);

/// Grid oracle evaluated at N, 2N, 4N and Richardson-extrapolated in 1/N^2
/// mode by mode; the sorted result converges to the continuum at O(N^-6).
std::vector<double> flat_torus_grid_oracle_extrapolated(const FlatTorus& m, int base_grid,
                                                        long long count);

} // namespace paneitz
