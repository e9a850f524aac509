#include "clw/field.hpp"

#include <cmath>
#include <string>

namespace clw {

GridSpec GridSpec::centered_cube(int n, double extent, int count) {
  GridSpec g;
  g.n = n;
  for (int k = 0; k < n; ++k) {
    g.x_min[k] = -extent / 2.0;
    g.x_max[k] = extent / 2.0;
    g.samples[k] = count;
  }
  g.validate();
  return g;
}

std::size_t GridSpec::cell_count() const {
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(samples[k]);
  return total;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int k = 0; k < n; ++k) v *= spacing(k);
  return v;
}

double GridSpec::volume() const {
  double v = 1.0;
  for (int k = 0; k < n; ++k) v *= length(k);
  return v;
}

std::array<int, 3> GridSpec::unflatten(std::size_t cell) const {
  std::array<int, 3> idx{};
  for (int k = n - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(cell % samples[k]);
    cell /= samples[k];
  }
  return idx;
}

std::size_t GridSpec::flatten(const std::array<int, 3>& idx) const {
  std::size_t cell = 0;
  for (int k = 0; k < n; ++k) {
    cell = cell * samples[k] + static_cast<std::size_t>(idx[k]);
  }
  return cell;
}

Vec GridSpec::point(std::size_t cell) const {
  const auto idx = unflatten(cell);
  Vec x{};
  for (int k = 0; k < n; ++k) x[k] = x_min[k] + idx[k] * spacing(k);
  return x;
}

Vec GridSpec::wrap(const Vec& d) const {
  Vec out{};
  for (int k = 0; k < n; ++k) {
    const double L = length(k);
    out[k] = d[k] - L * std::floor(d[k] / L + 0.5);
  }
  return out;
}

bool GridSpec::operator==(const GridSpec& other) const {
  if (n != other.n) return false;
  for (int k = 0; k < n; ++k) {
    if (x_min[k] != other.x_min[k] || x_max[k] != other.x_max[k] ||
        samples[k] != other.samples[k]) {
      return false;
    }
  }
  return true;
}

void GridSpec::validate() const {
  check_dimension(n);
  for (int k = 0; k < n; ++k) {
    if (samples[k] <= 0) {
      throw Error("grid axis " + std::to_string(k) + " has no samples");
    }
    if (!(x_max[k] > x_min[k])) {
      throw Error("grid axis " + std::to_string(k) + " has empty extent");
    }
  }
}

void check_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatch("fields are defined on different grids");
}

MultivectorField::MultivectorField(const GridSpec& grid)
    : grid_(grid), cells_(grid.cell_count()) {
  grid_.validate();
  data_.assign(static_cast<std::size_t>(blades()) * cells_, 0.0);
}

MultivectorField MultivectorField::sample(
    const GridSpec& grid, const std::function<Multivector(const Vec&)>& fn) {
  MultivectorField f(grid);
  for (std::size_t cell = 0; cell < f.cells_; ++cell) {
    f.set(cell, fn(grid.point(cell)));
  }
  return f;
}

Multivector MultivectorField::at(std::size_t cell) const {
  Multivector m(grid_.n);
  for (int b = 0; b < blades(); ++b) m[b] = plane(b)[cell];
  return m;
}

void MultivectorField::set(std::size_t cell, const Multivector& value) {
  if (value.dim() != grid_.n) {
    throw DimensionMismatch("sample dimension does not match field grid");
  }
  for (int b = 0; b < blades(); ++b) plane(b)[cell] = value[b];
}

MultivectorField& MultivectorField::operator+=(const MultivectorField& rhs) {
  check_same_grid(grid_, rhs.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

MultivectorField& MultivectorField::operator-=(const MultivectorField& rhs) {
  check_same_grid(grid_, rhs.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

MultivectorField MultivectorField::operator+(const MultivectorField& rhs) const {
  MultivectorField out = *this;
  out += rhs;
  return out;
}

MultivectorField MultivectorField::operator-(const MultivectorField& rhs) const {
  MultivectorField out = *this;
  out -= rhs;
  return out;
}

MultivectorField MultivectorField::operator*(double s) const {
  MultivectorField out = *this;
  out *= s;
  return out;
}

MultivectorField& MultivectorField::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

MultivectorField MultivectorField::scale_left(const Multivector& lambda) const {
  MultivectorField out(grid_);
  for (std::size_t cell = 0; cell < cells_; ++cell) {
    out.set(cell, geometric_product(lambda, at(cell)));
  }
  return out;
}

MultivectorField MultivectorField::scale_right(const Multivector& lambda) const {
  MultivectorField out(grid_);
  for (std::size_t cell = 0; cell < cells_; ++cell) {
    out.set(cell, geometric_product(at(cell), lambda));
  }
  return out;
}

MultivectorField MultivectorField::map(
    const std::function<Multivector(const Multivector&)>& fn) const {
  MultivectorField out(grid_);
  for (std::size_t cell = 0; cell < cells_; ++cell) out.set(cell, fn(at(cell)));
  return out;
}

Multivector inner_product(const MultivectorField& f, const MultivectorField& g) {
  check_same_grid(f.grid(), g.grid());
  Multivector acc(f.dim());
  for (std::size_t cell = 0; cell < f.cells(); ++cell) {
    acc += geometric_product(f.at(cell), reverse(g.at(cell)));
  }
  return acc * f.grid().cell_volume();
}

double norm(const MultivectorField& f) {
  // Same reduction as <(f,f)>_0 but without forming the full product.
  double acc = 0.0;
  for (const double v : f.raw()) acc += v * v;
  return std::sqrt(acc * f.grid().cell_volume());
}

}  // namespace clw
