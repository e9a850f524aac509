// Multivector-valued functions sampled on regular periodic grids over a box
// in R^n, with the L^2 inner product and norm.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "clw/multivector.hpp"

namespace clw {

// Spatial vector; only the first n components are meaningful.
using Vec = std::array<double, 3>;

inline double dot(const Vec& a, const Vec& b, int n) {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

// Uniform periodic grid on [x_min, x_max)^axis; x_max is identified with
// x_min. Cells are row-major with axis 0 slowest.
struct GridSpec {
  int n = 2;
  std::array<double, 3> x_min{};
  std::array<double, 3> x_max{};
  std::array<int, 3> samples{};

  // Cube [-extent/2, extent/2) with `count` samples per axis.
  static GridSpec centered_cube(int n, double extent, int count);

  double spacing(int axis) const {
    return (x_max[axis] - x_min[axis]) / samples[axis];
  }
  double length(int axis) const { return x_max[axis] - x_min[axis]; }
  std::size_t cell_count() const;
  // Product of per-axis spacings: the Riemann quadrature weight.
  double cell_volume() const;
  double volume() const;

  std::array<int, 3> unflatten(std::size_t cell) const;
  std::size_t flatten(const std::array<int, 3>& idx) const;
  Vec point(std::size_t cell) const;

  // Wraps a displacement into [-L/2, L/2) per axis (periodic convention).
  Vec wrap(const Vec& d) const;

  bool operator==(const GridSpec& other) const;

  void validate() const;
};

class MultivectorField {
 public:
  MultivectorField() = default;
  explicit MultivectorField(const GridSpec& grid);

  static MultivectorField sample(const GridSpec& grid,
                                 const std::function<Multivector(const Vec&)>& fn);

  const GridSpec& grid() const { return grid_; }
  int dim() const { return grid_.n; }
  int blades() const { return blade_count(grid_.n); }
  std::size_t cells() const { return cells_; }

  Multivector at(std::size_t cell) const;
  void set(std::size_t cell, const Multivector& value);

  // Blade-major storage: plane(A) holds the coefficient of blade A on the
  // whole grid in row-major cell order.
  double* plane(int blade) { return data_.data() + blade * cells_; }
  const double* plane(int blade) const { return data_.data() + blade * cells_; }
  const std::vector<double>& raw() const { return data_; }
  std::vector<double>& raw() { return data_; }

  MultivectorField& operator+=(const MultivectorField& rhs);
  MultivectorField& operator-=(const MultivectorField& rhs);
  MultivectorField operator+(const MultivectorField& rhs) const;
  MultivectorField operator-(const MultivectorField& rhs) const;
  MultivectorField operator*(double s) const;
  MultivectorField& operator*=(double s);

  // lambda * f(x) and f(x) * lambda with a constant multivector; the wavelet
  // transform is linear for constants applied from the left.
  MultivectorField scale_left(const Multivector& lambda) const;
  MultivectorField scale_right(const Multivector& lambda) const;

  MultivectorField map(const std::function<Multivector(const Multivector&)>& fn) const;

 private:
  GridSpec grid_;
  std::size_t cells_ = 0;
  std::vector<double> data_;
};

// (f,g) = sum_x f(x) g~(x) * cell_volume, a multivector.
Multivector inner_product(const MultivectorField& f, const MultivectorField& g);

// sqrt(<(f,f)>_0) = sqrt(sum_x |f(x)|^2 * cell_volume).
double norm(const MultivectorField& f);

void check_same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace clw
