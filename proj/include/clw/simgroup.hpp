// The similitude group SIM(n) = R+ x SO(n) |x R^n: group elements, rotation
// parametrization, Haar-measure quadrature grids, and the L^2(G) geometry of
// coefficient fields indexed by the grid.
//
// Conventions: the left Haar measure da dtheta d^n b / a^{n+1} is discretized
// with a midpoint rule in log(a) (weight a^{-n} d ln a), rotation nodes with
// weights summing to 1 (the SO(n) measure is normalized to unit mass), and
// translation nodes on the spatial grid with weight cell_volume.

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "clw/field.hpp"

namespace clw {

// Rotation in SO(2) (angle) or SO(3) (unit quaternion, scalar first).
class Rotation {
 public:
  Rotation() = default;

  static Rotation identity(int n);
  static Rotation so2(double angle);
  static Rotation so3(double w, double x, double y, double z);
  static Rotation so3_axis_angle(const Vec& axis, double angle);

  int dim() const { return n_; }
  double angle() const { return angle_; }
  const std::array<double, 4>& quaternion() const { return quat_; }

  Rotation inverse() const;
  // this o other: apply `other` first, then this rotation.
  Rotation compose(const Rotation& other) const;
  Vec apply(const Vec& x) const;
  std::array<std::array<double, 3>, 3> matrix() const;

  // Same rotation within tol (angle mod 2pi, quaternion up to sign).
  bool approx_equal(const Rotation& other, double tol) const;

 private:
  int n_ = 2;
  double angle_ = 0.0;                      // n == 2
  std::array<double, 4> quat_{1, 0, 0, 0};  // n == 3
};

// One element (a, r_theta, b) of SIM(n).
struct GroupPoint {
  double a = 1.0;
  Rotation rot;
  Vec b{};

  // x -> a r_theta(x) + b
  Vec apply(const Vec& x) const;
  // x -> r_theta^{-1}((x - b) / a)
  Vec inverse_apply(const Vec& x) const;
  GroupPoint compose(const GroupPoint& other) const;
};

enum class RotationSampling {
  // SO(2): uniform angles 2 pi k / K. SO(3): super-Fibonacci spiral of K
  // quaternions, equal weights.
  kUniform,
  // n = 3 only: the 24-element rotation group of the cube, equal weights;
  // closed under composition with axis-aligned quarter turns, which makes
  // exact discrete rotation-covariance checks possible.
  kOctahedral,
};

struct GroupGrid {
  GridSpec translations;
  std::vector<double> scales;
  std::vector<double> scale_weights;  // midpoint-in-log(a) weights of da/a^{n+1}
  std::vector<Rotation> rotations;
  std::vector<double> rotation_weights;  // sum to 1
  // Construction parameters, kept for serialization.
  double a_min = 0.0, a_max = 0.0;
  RotationSampling sampling = RotationSampling::kUniform;

  std::size_t scale_count() const { return scales.size(); }
  std::size_t rotation_count() const { return rotations.size(); }
  std::size_t node_count() const {
    return scale_count() * rotation_count() * translations.cell_count();
  }
  // d mu weight of the (scale j, rotation k) pair.
  double mu_weight(std::size_t j, std::size_t k) const {
    return scale_weights[j] * rotation_weights[k];
  }
  GroupPoint point(std::size_t j, std::size_t k, std::size_t cell) const;

  bool compatible(const GroupGrid& other) const;
};

GroupGrid build_group_grid(double a_min, double a_max, int scale_count,
                           int rotation_count, const GridSpec& grid,
                           RotationSampling sampling = RotationSampling::kUniform);

// T_psi f values on a GroupGrid. Storage is slice-major: for each (scale,
// rotation) pair a blade-major translation plane, matching the field layout.
class WaveletCoefficients {
 public:
  WaveletCoefficients() = default;
  explicit WaveletCoefficients(const GroupGrid& grid);

  const GroupGrid& grid() const { return grid_; }
  int dim() const { return grid_.translations.n; }
  int blades() const { return blade_count(dim()); }
  std::size_t cells() const { return cells_; }

  Multivector at(std::size_t j, std::size_t k, std::size_t cell) const;
  void set(std::size_t j, std::size_t k, std::size_t cell, const Multivector& v);

  // The (scale j, rotation k) slice as a field over the translation grid.
  MultivectorField slice_field(std::size_t j, std::size_t k) const;
  void set_slice(std::size_t j, std::size_t k, const MultivectorField& slice);

  double* slice_plane(std::size_t j, std::size_t k, int blade);
  const double* slice_plane(std::size_t j, std::size_t k, int blade) const;

  const std::vector<double>& raw() const { return data_; }
  std::vector<double>& raw() { return data_; }

 private:
  GroupGrid grid_;
  std::size_t cells_ = 0;
  std::vector<double> data_;
};

// (F,G)_{L^2(G)} = sum over nodes of F G~ with the Haar weights attached.
Multivector l2g_inner_product(const WaveletCoefficients& F,
                              const WaveletCoefficients& G);
double l2g_norm(const WaveletCoefficients& F);

}  // namespace clw
