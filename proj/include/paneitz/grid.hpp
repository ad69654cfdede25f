#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace paneitz {

/// Periodic product grid over a flat-torus parameter domain. Factor j is an
/// angle theta_j in [0, 2 pi) sampled at sizes[j] equispaced nodes; the flat
/// metric carries radius radii[j] on that circle, so the orthonormal frame
/// derivative along j is (1/radii[j]) d/dtheta_j. Storage is flattened in
/// factor-major lexicographic order (last factor fastest).
class ProductGrid {
public:
  ProductGrid(std::vector<int> sizes, std::vector<double> radii);

  int factors() const { return static_cast<int>(sizes_.size()); }
  long long total() const { return total_; }
  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<double>& radii() const { return radii_; }

  long long stride(int axis) const { return strides_[axis]; }
  double theta(int axis, int index) const;
  void unflatten(long long flat, std::span<int> index_out) const;

private:
  std::vector<int> sizes_;
  std::vector<double> radii_;
  std::vector<long long> strides_;
  long long total_ = 0;
};

/// Scalar samples over a ProductGrid.
struct GridField {
  ProductGrid grid;
  std::vector<double> values;

  GridField(ProductGrid g) : grid(std::move(g)), values(grid.total(), 0.0) {}
};

/// Vector-valued samples (component-major: comps contiguous planes).
struct VectorGridField {
  ProductGrid grid;
  int comps = 0;
  std::vector<double> values;

  VectorGridField(ProductGrid g, int c)
      : grid(std::move(g)), comps(c), values(static_cast<size_t>(grid.total()) * c, 0.0) {}

  std::span<double> component(int c) {
    return {values.data() + static_cast<size_t>(c) * grid.total(),
            static_cast<size_t>(grid.total())};
  }
  std::span<const double> component(int c) const {
    return {values.data() + static_cast<size_t>(c) * grid.total(),
            static_cast<size_t>(grid.total())};
  }
};

/// Dense trigonometric differentiation matrix of the given order for an
/// even-size periodic grid: exact on modes strictly below Nyquist; the
/// Nyquist mode's first derivative is mapped to zero and its second
/// derivative to -(N/2)^2 times itself (the exact symbols).
const std::vector<double>& differentiation_matrix(int size, int order);

/// theta-derivative of a scalar field along one axis (no radius scaling).
void apply_derivative(const ProductGrid& grid, std::span<const double> in, int axis, int order,
                      std::span<double> out);

/// Frame Laplacian: sum_j (1/r_j^2) d^2/dtheta_j^2.
void apply_laplacian(const ProductGrid& grid, std::span<const double> in, std::span<double> out);

/// Plain grid average (exact quadrature for trigonometric polynomials below
/// the Nyquist limit).
double grid_mean(std::span<const double> values);

/// CSV snapshot: one row per grid point in flattened (factor-major,
/// lexicographic) order, index columns then the value.
std::string grid_field_csv(const GridField& field);

} // namespace paneitz
