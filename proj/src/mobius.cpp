#include "paneitz/mobius.hpp"

#include <cmath>
#include <stdexcept>

namespace paneitz {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_param(std::span<const double> p) {
  if (dot(p, p) >= 1.0)
    throw std::invalid_argument("mobius: parameter must lie in the open unit ball");
}

} // namespace

void MobiusParam::validate() const {
  check_param(std::span<const double>(p.data(), p.size()));
}

void mobius_apply(std::span<const double> p, std::span<const double> x, std::span<double> out) {
  check_param(p);
  const double q = dot(p, p);
  const double xx = dot(x, x);
  if (std::abs(xx - 1.0) > 1e-12)
    throw std::invalid_argument("mobius_apply: input must be a unit vector");
  double y2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double yi = x[i] - p[i];
    y2 += yi * yi;
  }
  const double scale = (1.0 - q) / y2;
  for (size_t i = 0; i < x.size(); ++i) out[i] = scale * (x[i] - p[i]) - p[i];
}

void mobius_differential(std::span<const double> p, std::span<const double> x,
                         std::span<const double> v, std::span<double> out) {
  check_param(p);
  double y2 = 0.0, yv = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double yi = x[i] - p[i];
    y2 += yi * yi;
    yv += yi * v[i];
  }
  const double q = dot(p, p);
  const double a = (1.0 - q) / y2;
  const double b = 2.0 * (1.0 - q) * yv / (y2 * y2);
  for (size_t i = 0; i < x.size(); ++i) out[i] = a * v[i] - b * (x[i] - p[i]);
}

double mobius_stretch(std::span<const double> p, std::span<const double> x) {
  check_param(p);
  double y2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double yi = x[i] - p[i];
    y2 += yi * yi;
  }
  return (1.0 - dot(p, p)) / y2;
}

Eigen::VectorXd mobius_apply(const MobiusParam& p, const Eigen::VectorXd& x) {
  if (p.p.size() != x.size())
    throw std::invalid_argument("mobius_apply: dimension mismatch");
  Eigen::VectorXd out(x.size());
  mobius_apply(std::span<const double>(p.p.data(), p.p.size()),
               std::span<const double>(x.data(), x.size()),
               std::span<double>(out.data(), out.size()));
  return out;
}

Eigen::VectorXd ambient_map(int c, const Eigen::VectorXd& x) {
  switch (c) {
    case 1: {
      if (std::abs(x.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("ambient_map: c = 1 expects a unit vector");
      return x;
    }
    case -1:
      if (x.norm() >= 1.0)
        throw std::invalid_argument("ambient_map: c = -1 expects a Poincare-ball point (|x| < 1)");
      [[fallthrough]];
    case 0: {
      // Inverse stereographic projection from the north pole.
      const double r2 = x.squaredNorm();
      Eigen::VectorXd out(x.size() + 1);
      out.head(x.size()) = 2.0 * x / (r2 + 1.0);
      out(x.size()) = (r2 - 1.0) / (r2 + 1.0);
      return out;
    }
    default:
      throw std::invalid_argument("ambient_map: c must be one of {-1, 0, +1}");
  }
}

Eigen::VectorXd AmbientMap::operator()(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y = ambient_map(c, x);
  if (composed_mobius) {
    composed_mobius->validate();
    y = mobius_apply(*composed_mobius, y);
  }
  return y;
}

} // namespace paneitz
