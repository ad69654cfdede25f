#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace paneitz {

/// Conformal diffeomorphism of the unit sphere S^N parametrized by a point p
/// of the open unit ball in R^{N+1}:
///   phi_p(x) = (1 - |p|^2)(x - p) / |x - p|^2 - p.
/// phi_0 is the identity, phi_p maps the sphere to itself exactly, and
/// phi_{-p} inverts phi_p.
struct MobiusParam {
  Eigen::VectorXd p;

  void validate() const;
};

/// Low-level kernels on raw coordinate spans (used by the grid checkers,
/// where points are slices of large sample arrays).
void mobius_apply(std::span<const double> p, std::span<const double> x, std::span<double> out);

/// Differential of phi_p at x applied to an arbitrary vector v (phi_p extends
/// to a conformal map of R^{N+1} minus a point, so v need not be tangent).
void mobius_differential(std::span<const double> p, std::span<const double> x,
                         std::span<const double> v, std::span<double> out);

/// Pointwise conformal stretch of phi_p at x: (1 - |p|^2) / |x - p|^2.
double mobius_stretch(std::span<const double> p, std::span<const double> x);

Eigen::VectorXd mobius_apply(const MobiusParam& p, const Eigen::VectorXd& x);

/// Conformal map Gamma from the ambient model space onto the unit sphere:
/// the identity inclusion for c = 1, inverse stereographic projection from
/// the north pole for c = 0 (0 maps to the south pole), and the same
/// projection restricted to the Poincare ball for c = -1 (onto the open
/// lower hemisphere).
Eigen::VectorXd ambient_map(int c, const Eigen::VectorXd& x);

struct AmbientMap {
  int c = 0;
  std::optional<MobiusParam> composed_mobius;

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const;
};

} // namespace paneitz
