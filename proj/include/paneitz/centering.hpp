#pragma once

#include <Eigen/Dense>

namespace paneitz {

struct CenteringOptions {
  double tol = 1e-9;
  int max_iter = 200;
};

struct CenteringResult {
  Eigen::VectorXd p;
  double residual = 0.0; // |sum_i w_i phi_p(X_i)| / sum_i |w_i|
  int iterations = 0;
  bool converged = false;
};

/// Finds a Mobius parameter p so the weighted moment of the transformed
/// points vanishes: sum_i w_i phi_p(X_i) = 0. Damped Newton on the moment
/// map with a central-difference Jacobian, initialized at a scaled negative
/// weighted centroid, with step-halving line search on |m|^2 and a homotopy
/// restart (weights blended toward uniform) on stall.
///
/// Weights must be strictly positive: the construction centers a positive
/// measure, and mixed-sign input is refused rather than silently accepted.
/// Nonconvergence is reported through the result (best residual found), not
/// thrown; near-degenerate mass concentrations legitimately fail.
CenteringResult center_measure(const Eigen::MatrixXd& points, const Eigen::VectorXd& weights,
                               const CenteringOptions& opts = {});

} // namespace paneitz
