#include "paneitz/grid.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace paneitz {

ProductGrid::ProductGrid(std::vector<int> sizes, std::vector<double> radii)
    : sizes_(std::move(sizes)), radii_(std::move(radii)) {
  if (sizes_.empty() || sizes_.size() != radii_.size())
    throw std::invalid_argument("ProductGrid: sizes and radii must be nonempty and match");
  total_ = 1;
  for (size_t j = 0; j < sizes_.size(); ++j) {
    if (sizes_[j] < 8 || sizes_[j] % 2 != 0)
      throw std::invalid_argument("ProductGrid: grid sizes must be even and >= 8");
    if (!(radii_[j] > 0.0))
      throw std::invalid_argument("ProductGrid: factor radii must be positive");
    total_ *= sizes_[j];
  }
  strides_.assign(sizes_.size(), 1);
  for (int j = static_cast<int>(sizes_.size()) - 2; j >= 0; --j)
    strides_[j] = strides_[j + 1] * sizes_[j + 1];
}

double ProductGrid::theta(int axis, int index) const {
  return 2.0 * std::numbers::pi * index / sizes_[axis];
}

void ProductGrid::unflatten(long long flat, std::span<int> index_out) const {
  for (size_t j = 0; j < sizes_.size(); ++j) {
    index_out[j] = static_cast<int>(flat / strides_[j]);
    flat %= strides_[j];
  }
}

const std::vector<double>& differentiation_matrix(int size, int order) {
  if (size < 8 || size % 2 != 0)
    throw std::invalid_argument("differentiation_matrix: size must be even and >= 8");
  if (order != 1 && order != 2)
    throw std::invalid_argument("differentiation_matrix: order must be 1 or 2");

  static std::map<std::pair<int, int>, std::vector<double>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({size, order});
  if (it != cache.end()) return it->second;

  const int N = size;
  std::vector<double> D(static_cast<size_t>(N) * N, 0.0);
  const double h = 2.0 * std::numbers::pi / N;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      const double delta = h * (a - b);
      double sum = 0.0;
      for (int k = 1; k <= N / 2 - 1; ++k) {
        if (order == 1)
          sum += -2.0 * k * std::sin(k * delta);
        else
          sum += -2.0 * k * k * std::cos(k * delta);
      }
      if (order == 2) {
        // Exact Nyquist symbol for the second derivative; the first
        // derivative maps the sawtooth mode to zero.
        const double ny = N / 2.0;
        sum += -ny * ny * (((a - b) % 2 + 2) % 2 == 0 ? 1.0 : -1.0);
      }
      D[static_cast<size_t>(a) * N + b] = sum / N;
    }
  }
  // Negative-sum trick: force each row to annihilate constants exactly, so
  // derivatives of constant fields are bitwise zero.
  for (int a = 0; a < N; ++a) {
    double rowsum = 0.0;
    for (int b = 0; b < N; ++b) rowsum += D[static_cast<size_t>(a) * N + b];
    D[static_cast<size_t>(a) * N + a] -= rowsum;
  }
  return cache.emplace(std::make_pair(size, order), std::move(D)).first->second;
}

void apply_derivative(const ProductGrid& grid, std::span<const double> in, int axis, int order,
                      std::span<double> out) {
  if (axis < 0 || axis >= grid.factors())
    throw std::invalid_argument("apply_derivative: axis out of range");
  if (static_cast<long long>(in.size()) != grid.total() || in.size() != out.size())
    throw std::invalid_argument("apply_derivative: field size mismatch");

  const int N = grid.sizes()[axis];
  const long long stride = grid.stride(axis);
  const std::vector<double>& D = differentiation_matrix(N, order);
  std::vector<double> line(N);

  const long long block = N * stride;
  const long long nblocks = grid.total() / block;
  for (long long blk = 0; blk < nblocks; ++blk) {
    const long long base = blk * block;
    for (long long off = 0; off < stride; ++off) {
      for (int k = 0; k < N; ++k) line[k] = in[base + off + k * stride];
      for (int a = 0; a < N; ++a) {
        const double* row = D.data() + static_cast<size_t>(a) * N;
        double acc = 0.0;
        for (int k = 0; k < N; ++k) acc += row[k] * line[k];
        out[base + off + a * stride] = acc;
      }
    }
  }
}

void apply_laplacian(const ProductGrid& grid, std::span<const double> in, std::span<double> out) {
  if (static_cast<long long>(in.size()) != grid.total() || in.size() != out.size())
    throw std::invalid_argument("apply_laplacian: field size mismatch");
  std::vector<double> tmp(in.size());
  std::fill(out.begin(), out.end(), 0.0);
  for (int axis = 0; axis < grid.factors(); ++axis) {
    apply_derivative(grid, in, axis, 2, tmp);
    const double inv_r2 = 1.0 / (grid.radii()[axis] * grid.radii()[axis]);
    for (size_t i = 0; i < out.size(); ++i) out[i] += inv_r2 * tmp[i];
  }
}

double grid_mean(std::span<const double> values) {
  // Compensated (Kahan) summation in fixed order: deterministic and keeps
  // quadrature error below the tolerances the identity checks assert.
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(values.size());
}

std::string grid_field_csv(const GridField& field) {
  const auto& grid = field.grid;
  std::string out;
  for (int j = 0; j < grid.factors(); ++j) {
    out += "i" + std::to_string(j + 1) + ",";
  }
  out += "value\n";
  std::vector<int> idx(grid.factors());
  char buf[32];
  for (long long flat = 0; flat < grid.total(); ++flat) {
    grid.unflatten(flat, idx);
    for (int j = 0; j < grid.factors(); ++j) {
      out += std::to_string(idx[j]);
      out += ',';
    }
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), field.values[flat]);
    out.append(buf, ptr);
    out += '\n';
  }
  return out;
}

} // namespace paneitz
