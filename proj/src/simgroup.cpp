#include "clw/simgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace clw {

namespace {

std::array<double, 4> quat_multiply(const std::array<double, 4>& p,
                                    const std::array<double, 4>& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

double wrap_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0) a += two_pi;
  return a;
}

// Deterministic quasi-uniform quaternion set (super-Fibonacci spiral).
std::vector<Rotation> superfibonacci_rotations(int count) {
  const double phi = std::sqrt(2.0);
  const double psi = 1.533751168755204288118041;  // root of x^4 = x + 4
  std::vector<Rotation> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double s = i + 0.5;
    const double t = s / count;
    const double d = 2.0 * std::numbers::pi * s;
    const double r = std::sqrt(t);
    const double R = std::sqrt(1.0 - t);
    const double alpha = d / phi;
    const double beta = d / psi;
    out.push_back(Rotation::so3(r * std::sin(alpha), r * std::cos(alpha),
                                R * std::sin(beta), R * std::cos(beta)));
  }
  return out;
}

// The 24 rotations of the cube, generated by closure from quarter turns.
std::vector<Rotation> octahedral_rotations() {
  std::vector<Rotation> group = {Rotation::identity(3)};
  const std::array<Rotation, 2> gens = {
      Rotation::so3_axis_angle({1, 0, 0}, std::numbers::pi / 2),
      Rotation::so3_axis_angle({0, 0, 1}, std::numbers::pi / 2)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (const Rotation& g : gens) {
        const Rotation candidate = g.compose(group[i]);
        bool found = false;
        for (const Rotation& r : group) {
          if (r.approx_equal(candidate, 1e-9)) {
            found = true;
            break;
          }
        }
        if (!found) {
          group.push_back(candidate);
          grew = true;
        }
      }
    }
  }
  // Canonical deterministic order: sort by sign-fixed quaternion.
  std::sort(group.begin(), group.end(), [](const Rotation& a, const Rotation& b) {
    auto key = [](const Rotation& r) {
      std::array<double, 4> q = r.quaternion();
      for (double c : q) {
        if (c > 1e-12) break;
        if (c < -1e-12) {
          for (double& v : q) v = -v;
          break;
        }
      }
      return q;
    };
    return key(a) < key(b);
  });
  return group;
}

}  // namespace

Rotation Rotation::identity(int n) {
  check_dimension(n);
  Rotation r;
  r.n_ = n;
  return r;
}

Rotation Rotation::so2(double angle) {
  Rotation r;
  r.n_ = 2;
  r.angle_ = wrap_angle(angle);
  return r;
}

Rotation Rotation::so3(double w, double x, double y, double z) {
  Rotation r;
  r.n_ = 3;
  const double mag = std::sqrt(w * w + x * x + y * y + z * z);
  if (mag == 0.0) throw Error("zero quaternion is not a rotation");
  r.quat_ = {w / mag, x / mag, y / mag, z / mag};
  return r;
}

Rotation Rotation::so3_axis_angle(const Vec& axis, double angle) {
  const double mag =
      std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (mag == 0.0) throw Error("zero axis is not a rotation axis");
  const double half = angle / 2.0;
  const double s = std::sin(half) / mag;
  return so3(std::cos(half), s * axis[0], s * axis[1], s * axis[2]);
}

Rotation Rotation::inverse() const {
  Rotation r = *this;
  if (n_ == 2) {
    r.angle_ = wrap_angle(-angle_);
  } else {
    r.quat_ = {quat_[0], -quat_[1], -quat_[2], -quat_[3]};
  }
  return r;
}

Rotation Rotation::compose(const Rotation& other) const {
  if (n_ != other.n_) throw DimensionMismatch("composing rotations of mixed n");
  Rotation r = *this;
  if (n_ == 2) {
    r.angle_ = wrap_angle(angle_ + other.angle_);
  } else {
    r.quat_ = quat_multiply(quat_, other.quat_);
    const double mag = std::sqrt(r.quat_[0] * r.quat_[0] + r.quat_[1] * r.quat_[1] +
                                 r.quat_[2] * r.quat_[2] + r.quat_[3] * r.quat_[3]);
    for (double& c : r.quat_) c /= mag;
  }
  return r;
}

Vec Rotation::apply(const Vec& x) const {
  Vec out{};
  if (n_ == 2) {
    const double c = std::cos(angle_), s = std::sin(angle_);
    out[0] = c * x[0] - s * x[1];
    out[1] = s * x[0] + c * x[1];
  } else {
    // q v q* with v = (0, x).
    const auto& q = quat_;
    const std::array<double, 4> v = {0.0, x[0], x[1], x[2]};
    const std::array<double, 4> qc = {q[0], -q[1], -q[2], -q[3]};
    const auto t = quat_multiply(quat_multiply(q, v), qc);
    out = {t[1], t[2], t[3]};
  }
  return out;
}

std::array<std::array<double, 3>, 3> Rotation::matrix() const {
  std::array<std::array<double, 3>, 3> m{};
  const std::array<Vec, 3> basis = {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}};
  for (int col = 0; col < n_; ++col) {
    const Vec image = apply(basis[col]);
    for (int row = 0; row < n_; ++row) m[row][col] = image[row];
  }
  if (n_ == 2) m[2][2] = 1.0;
  return m;
}

bool Rotation::approx_equal(const Rotation& other, double tol) const {
  if (n_ != other.n_) return false;
  if (n_ == 2) {
    double d = std::abs(wrap_angle(angle_) - wrap_angle(other.angle_));
    d = std::min(d, 2.0 * std::numbers::pi - d);
    return d <= tol;
  }
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < 4; ++i) {
    plus += (quat_[i] - other.quat_[i]) * (quat_[i] - other.quat_[i]);
    minus += (quat_[i] + other.quat_[i]) * (quat_[i] + other.quat_[i]);
  }
  return std::min(std::sqrt(plus), std::sqrt(minus)) <= tol;
}

Vec GroupPoint::apply(const Vec& x) const {
  const Vec rx = rot.apply(x);
  Vec out{};
  for (int k = 0; k < rot.dim(); ++k) out[k] = a * rx[k] + b[k];
  return out;
}

Vec GroupPoint::inverse_apply(const Vec& x) const {
  Vec shifted{};
  for (int k = 0; k < rot.dim(); ++k) shifted[k] = (x[k] - b[k]) / a;
  return rot.inverse().apply(shifted);
}

GroupPoint GroupPoint::compose(const GroupPoint& other) const {
  GroupPoint out;
  out.a = a * other.a;
  out.rot = rot.compose(other.rot);
  const Vec rb = rot.apply(other.b);
  for (int k = 0; k < rot.dim(); ++k) out.b[k] = a * rb[k] + b[k];
  return out;
}

GroupPoint GroupGrid::point(std::size_t j, std::size_t k, std::size_t cell) const {
  GroupPoint g;
  g.a = scales[j];
  g.rot = rotations[k];
  g.b = translations.point(cell);
  return g;
}

bool GroupGrid::compatible(const GroupGrid& other) const {
  if (!(translations == other.translations)) return false;
  if (scales.size() != other.scales.size() ||
      rotations.size() != other.rotations.size()) {
    return false;
  }
  for (std::size_t j = 0; j < scales.size(); ++j) {
    if (scales[j] != other.scales[j]) return false;
  }
  for (std::size_t k = 0; k < rotations.size(); ++k) {
    if (!rotations[k].approx_equal(other.rotations[k], 1e-12)) return false;
  }
  return true;
}

GroupGrid build_group_grid(double a_min, double a_max, int scale_count,
                           int rotation_count, const GridSpec& grid,
                           RotationSampling sampling) {
  grid.validate();
  if (!(a_min > 0.0) || !(a_max > a_min)) {
    throw Error("scale range must satisfy 0 < a_min < a_max");
  }
  if (scale_count < 1 || rotation_count < 1) {
    throw Error("scale and rotation counts must be >= 1");
  }
  GroupGrid g;
  g.translations = grid;
  g.a_min = a_min;
  g.a_max = a_max;
  g.sampling = sampling;

  // Midpoint rule in t = ln(a): da/a^{n+1} = a^{-n} dt.
  const double step = std::log(a_max / a_min) / scale_count;
  for (int j = 0; j < scale_count; ++j) {
    const double a = a_min * std::exp((j + 0.5) * step);
    g.scales.push_back(a);
    g.scale_weights.push_back(step * std::pow(a, -grid.n));
  }

  if (grid.n == 2) {
    if (sampling == RotationSampling::kOctahedral) {
      throw Error("octahedral rotation sampling requires n=3");
    }
    for (int k = 0; k < rotation_count; ++k) {
      g.rotations.push_back(
          Rotation::so2(2.0 * std::numbers::pi * k / rotation_count));
    }
  } else if (sampling == RotationSampling::kOctahedral) {
    g.rotations = octahedral_rotations();
  } else {
    g.rotations = superfibonacci_rotations(rotation_count);
  }
  g.rotation_weights.assign(g.rotations.size(), 1.0 / g.rotations.size());
  return g;
}

WaveletCoefficients::WaveletCoefficients(const GroupGrid& grid)
    : grid_(grid), cells_(grid.translations.cell_count()) {
  data_.assign(grid_.scale_count() * grid_.rotation_count() *
                   static_cast<std::size_t>(blades()) * cells_,
               0.0);
}

double* WaveletCoefficients::slice_plane(std::size_t j, std::size_t k, int blade) {
  const std::size_t slice = j * grid_.rotation_count() + k;
  return data_.data() + (slice * blades() + blade) * cells_;
}

const double* WaveletCoefficients::slice_plane(std::size_t j, std::size_t k,
                                               int blade) const {
  const std::size_t slice = j * grid_.rotation_count() + k;
  return data_.data() + (slice * blades() + blade) * cells_;
}

MultivectorField WaveletCoefficients::slice_field(std::size_t j,
                                                  std::size_t k) const {
  MultivectorField out(grid_.translations);
  for (int b = 0; b < blades(); ++b) {
    const double* src = slice_plane(j, k, b);
    double* dst = out.plane(b);
    for (std::size_t c = 0; c < cells_; ++c) dst[c] = src[c];
  }
  return out;
}

void WaveletCoefficients::set_slice(std::size_t j, std::size_t k,
                                    const MultivectorField& slice) {
  check_same_grid(grid_.translations, slice.grid());
  for (int b = 0; b < blades(); ++b) {
    const double* src = slice.plane(b);
    double* dst = slice_plane(j, k, b);
    for (std::size_t c = 0; c < cells_; ++c) dst[c] = src[c];
  }
}

Multivector WaveletCoefficients::at(std::size_t j, std::size_t k,
                                    std::size_t cell) const {
  Multivector m(dim());
  for (int b = 0; b < blades(); ++b) m[b] = slice_plane(j, k, b)[cell];
  return m;
}

void WaveletCoefficients::set(std::size_t j, std::size_t k, std::size_t cell,
                              const Multivector& v) {
  for (int b = 0; b < blades(); ++b) slice_plane(j, k, b)[cell] = v[b];
}

Multivector l2g_inner_product(const WaveletCoefficients& F,
                              const WaveletCoefficients& G) {
  if (!F.grid().compatible(G.grid())) {
    throw GridMismatch("coefficient fields live on different group grids");
  }
  const GroupGrid& grid = F.grid();
  const double db = grid.translations.cell_volume();
  Multivector acc(F.dim());
  for (std::size_t j = 0; j < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      Multivector slice_acc(F.dim());
      for (std::size_t cell = 0; cell < F.cells(); ++cell) {
        slice_acc +=
            geometric_product(F.at(j, k, cell), reverse(G.at(j, k, cell)));
      }
      acc += slice_acc * (grid.mu_weight(j, k) * db);
    }
  }
  return acc;
}

double l2g_norm(const WaveletCoefficients& F) {
  const GroupGrid& grid = F.grid();
  const double db = grid.translations.cell_volume();
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      double slice_acc = 0.0;
      for (int blade = 0; blade < F.blades(); ++blade) {
        const double* p = F.slice_plane(j, k, blade);
        for (std::size_t cell = 0; cell < F.cells(); ++cell) {
          slice_acc += p[cell] * p[cell];
        }
      }
      acc += slice_acc * grid.mu_weight(j, k) * db;
    }
  }
  return std::sqrt(acc);
}

}  // namespace clw
