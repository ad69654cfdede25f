#include "paneitz/centering.hpp"

#include <cmath>
#include <stdexcept>

namespace paneitz {

namespace {

// Weighted moment of the transformed cloud:
//   m(p) = sum_i w_i phi_p(X_i) = sum_i w_i (1-|p|^2)(X_i - p)/|X_i - p|^2 - W p.
Eigen::VectorXd moment(const Eigen::MatrixXd& X, const Eigen::VectorXd& w,
                       const Eigen::VectorXd& p) {
  const double q = p.squaredNorm();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(p.size());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const auto x = X.row(i).transpose();
    const double y2 = (x - p).squaredNorm();
    m += w(i) * (1.0 - q) / y2 * (x - p);
  }
  m -= w.sum() * p;
  return m;
}

Eigen::VectorXd clamp_to_ball(Eigen::VectorXd p, double max_norm) {
  const double norm = p.norm();
  if (norm > max_norm) p *= max_norm / norm;
  return p;
}

struct NewtonOutcome {
  Eigen::VectorXd p;
  double residual;
  int iterations;
  bool converged;
  bool stalled;
};

NewtonOutcome damped_newton(const Eigen::MatrixXd& X, const Eigen::VectorXd& w,
                            Eigen::VectorXd p, double tol, int iter_budget) {
  const int d = static_cast<int>(p.size());
  const double wsum = w.sum();
  NewtonOutcome out{p, moment(X, w, p).norm() / wsum, 0, false, false};

  for (int it = 0; it < iter_budget; ++it) {
    Eigen::VectorXd m = moment(X, w, p);
    const double res = m.norm() / wsum;
    if (res < out.residual) {
      out.residual = res;
      out.p = p;
    }
    out.iterations = it;
    if (res <= tol) {
      out.converged = true;
      return out;
    }

    const double h = 1e-6 * (1.0 - p.norm());
    Eigen::MatrixXd J(d, d);
    for (int a = 0; a < d; ++a) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
      e(a) = h;
      J.col(a) = (moment(X, w, p + e) - moment(X, w, p - e)) / (2.0 * h);
    }
    Eigen::VectorXd step = J.partialPivLu().solve(-m);
    if (!step.allFinite()) step = -m;

    // Step-halving line search on |m|^2, keeping p inside the ball.
    const double base = m.squaredNorm();
    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      Eigen::VectorXd cand = p + t * step;
      if (cand.norm() < 0.999999) {
        if (moment(X, w, cand).squaredNorm() < base) {
          p = cand;
          accepted = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!accepted) {
      out.stalled = true;
      return out;
    }
  }
  out.stalled = true;
  return out;
}

} // namespace

CenteringResult center_measure(const Eigen::MatrixXd& points, const Eigen::VectorXd& weights,
                               const CenteringOptions& opts) {
  const Eigen::Index K = points.rows();
  const int d = static_cast<int>(points.cols());
  if (K < 2 || d < 2)
    throw std::invalid_argument("center_measure: need at least 2 points in dimension >= 2");
  if (weights.size() != K)
    throw std::invalid_argument("center_measure: weight count does not match point count");
  for (Eigen::Index i = 0; i < K; ++i) {
    if (!(weights(i) > 0.0))
      throw std::invalid_argument("center_measure: weights must be strictly positive "
                                  "(the construction centers a positive measure)");
    if (std::abs(points.row(i).norm() - 1.0) > 1e-12)
      throw std::invalid_argument("center_measure: points must lie on the unit sphere");
  }
  if ((points.rowwise() - points.row(0)).rowwise().norm().maxCoeff() < 1e-14)
    throw std::invalid_argument("center_measure: points must not all coincide");

  const double wsum = weights.sum();
  const Eigen::VectorXd centroid = points.transpose() * weights / wsum;
  Eigen::VectorXd p0 = clamp_to_ball(-0.5 * centroid, 0.9);

  auto best = damped_newton(points, weights, p0, opts.tol, opts.max_iter);
  int used = best.iterations;

  if (!best.converged && used < opts.max_iter) {
    // Homotopy restart: solve with weights blended toward uniform, walking
    // the blend back down and warm-starting p at each stage.
    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(K, wsum / K);
    Eigen::VectorXd p = clamp_to_ball(-0.5 * centroid, 0.9);
    for (double t : {1.0, 0.5, 0.25, 0.0}) {
      if (used >= opts.max_iter) break;
      const Eigen::VectorXd wt = (1.0 - t) * weights + t * uniform;
      auto stage = damped_newton(points, wt, p, opts.tol, opts.max_iter - used);
      used += stage.iterations;
      p = clamp_to_ball(stage.p, 0.999999);
      if (t == 0.0 && stage.converged) {
        best = stage;
        best.iterations = used;
      } else if (t == 0.0 && stage.residual < best.residual) {
        best = stage;
        best.iterations = used;
      }
    }
  }

  CenteringResult result;
  result.p = best.p;
  result.residual = moment(points, weights, best.p).norm() / wsum;
  result.iterations = std::max(best.iterations, used);
  result.converged = result.residual <= opts.tol;
  return result;
}

} // namespace paneitz
