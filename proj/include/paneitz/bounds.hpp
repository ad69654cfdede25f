#pragma once

#include <optional>
#include <string>

#include "paneitz/spectrum.hpp"

namespace paneitz {

/// Both sides of the second-eigenvalue estimate for one model, per unit
/// volume (every catalog integrand is constant, so per-unit-volume
/// evaluation is exact). rhs_remark31 is present only when the model's
/// scalar curvature is nonnegative, which is that variant's hypothesis.
struct BoundReport {
  int n = 0;
  int c = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double rhs_theorem = 0.0;
  double rhs_corollary = 0.0;
  std::optional<double> rhs_remark31;
  double slack_theorem = 0.0;
  bool equality = false;
  bool n_valid = false; // n >= 7: inside the theorem's proven range
  double lambda1_bound = 0.0; // (n-4) Q / 2 mean value
};

struct VerifyOptions {
  long long count_budget = 2; // eigenvalues to certify (lambda2 needs 2)
  EnumerationOptions enumeration;
};

/// Evaluates the second-eigenvalue bound, its scalar-curvature corollary and
/// (when R >= 0) the nonnegative-curvature variant for a catalog model. For
/// n <= 6 the report is a probe: n_valid is false and no verdict is implied.
BoundReport verify_theorem(const ModelManifold& model, const VerifyOptions& opts = {});

struct Lambda1Bound {
  double lambda1 = 0.0;
  double bound = 0.0; // (n-4) Q / 2
  bool strict = false; // false when Q is constant (all catalog models)
};

/// First-eigenvalue bound by the mean of Q; equality on constant-Q models,
/// where constants are eigenfunctions.
Lambda1Bound lambda1_mean_q_bound(const ModelManifold& model);

/// Radius of the geodesic sphere attaining a given lambda2:
///   r0 = (1/2) (n(n+4)(n^2-4) / lambda2)^{1/4},
///   r1 = arcsin r0, r_{-1} = asinh r0.
double radius_from_lambda2(int n, double lambda2, int c);

/// (1/2)(n+2)(n^2 - 8n + 8): the coefficient multiplying the discarded
/// gradient term in the main estimate; positive exactly for n >= 7.
double slack_coefficient(int n);

struct ReillyCheck {
  double bound = 0.0;
  bool equality = false;
};

/// Classical first-eigenvalue bound lambda_1(Delta) <= n |H|^2 per unit
/// volume, stated and implemented for c = 0 only.
ReillyCheck reilly_laplace_check(const ModelManifold& model, double laplace_lambda1);

/// Stable JSON form of a BoundReport (field names as in the struct; absent
/// optional fields are omitted).
std::string bound_report_json(const BoundReport& report);

} // namespace paneitz
