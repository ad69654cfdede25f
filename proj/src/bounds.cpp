#include "paneitz/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace paneitz {

namespace {
constexpr double kEqualityRelTol = 1e-9;
} // namespace

BoundReport verify_theorem(const ModelManifold& model, const VerifyOptions& opts) {
  const ModelData md = model_data(model);
  const int n = md.invariants.n;
  const auto coeffs = coefficients(n, /*allow_extrapolated=*/n < 5);
  const QValue q = q_curvature(md.curvature, coeffs);

  auto spec = enumerate_spectrum(md.spectrum, md.curvature, q, coeffs,
                                 std::max<long long>(2, opts.count_budget),
                                 opts.enumeration);

  BoundReport rep;
  rep.n = n;
  rep.c = md.invariants.c;
  rep.lambda1 = spec.slices.front().value;
  rep.lambda2 = second_eigenvalue(spec.slices);

  const double kappa = md.invariants.mean_curv_sq + md.invariants.c;
  const double R = md.curvature.scalar;
  rep.rhs_theorem = 0.5 * n * (n * n - 4.0) * kappa * kappa + 0.5 * (n - 4.0) * q.q;
  rep.rhs_corollary = 0.5 * n * (n * n - 4.0) * kappa * kappa +
                      (n - 4.0) * (n * n - 4.0) * R * R / (16.0 * n * (n - 1.0) * (n - 1.0));
  if (R >= 0.0)
    rep.rhs_remark31 = n * (n + 4.0) * (n * n - 4.0) * kappa * kappa / 16.0;
  rep.slack_theorem = rep.rhs_theorem - rep.lambda2;
  rep.equality = std::abs(rep.slack_theorem) <= kEqualityRelTol * rep.rhs_theorem;
  rep.n_valid = n >= 7;
  rep.lambda1_bound = 0.5 * (n - 4.0) * q.q;
  return rep;
}

Lambda1Bound lambda1_mean_q_bound(const ModelManifold& model) {
  const ModelData md = model_data(model);
  const auto coeffs = coefficients(md.invariants.n, md.invariants.n < 5);
  const QValue q = q_curvature(md.curvature, coeffs);
  auto spec = enumerate_spectrum(md.spectrum, md.curvature, q, coeffs, 2, {});
  // Q is constant on every catalog model, so constants are eigenfunctions
  // and the mean-value bound is attained.
  return {spec.slices.front().value, 0.5 * (md.invariants.n - 4.0) * q.q, false};
}

double radius_from_lambda2(int n, double lambda2, int c) {
  if (!(lambda2 > 0.0))
    throw std::invalid_argument("radius_from_lambda2: lambda2 must be > 0");
  if (c != -1 && c != 0 && c != 1)
    throw std::invalid_argument("radius_from_lambda2: c must be one of {-1, 0, +1}");
  const double r0 =
      0.5 * std::pow(n * (n + 4.0) * (n * n - 4.0) / lambda2, 0.25);
  switch (c) {
    case 0: return r0;
    case -1: return std::asinh(r0);
    default:
      if (r0 > 1.0 + 1e-12)
        throw std::domain_error("radius_from_lambda2: no geodesic sphere in the unit "
                                "sphere attains this lambda2 (r0 > 1)");
      return std::asin(std::min(r0, 1.0));
  }
}

double slack_coefficient(int n) {
  if (n < 3) throw std::invalid_argument("slack_coefficient: n must be >= 3");
  return 0.5 * (n + 2.0) * (static_cast<double>(n) * n - 8.0 * n + 8.0);
}

ReillyCheck reilly_laplace_check(const ModelManifold& model, double laplace_lambda1) {
  const ModelData md = model_data(model);
  if (md.invariants.c != 0)
    throw std::invalid_argument("reilly_laplace_check: stated for c = 0 only");
  const double bound = md.invariants.n * md.invariants.mean_curv_sq;
  const bool equality =
      is_umbilic(md.invariants) &&
      std::abs(laplace_lambda1 - bound) <= kEqualityRelTol * std::max(1.0, bound);
  return {bound, equality};
}

std::string bound_report_json(const BoundReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["c"] = rep.c;
  j["lambda1"] = rep.lambda1;
  j["lambda2"] = rep.lambda2;
  j["rhs_theorem"] = rep.rhs_theorem;
  j["rhs_corollary"] = rep.rhs_corollary;
  if (rep.rhs_remark31) j["rhs_remark31"] = *rep.rhs_remark31;
  j["slack_theorem"] = rep.slack_theorem;
  j["equality"] = rep.equality;
  j["n_valid"] = rep.n_valid;
  j["lambda1_bound"] = rep.lambda1_bound;
  return j.dump();
}

} // namespace paneitz
