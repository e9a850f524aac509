#include "clw/cft.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fft_backend.hpp"

namespace clw {

namespace {

struct BladePair {
  int base;    // canonical index of e_A
  int partner; // canonical index of e_P with e_A i_n = sign * e_P
  double sign;
};

// Pairs every blade with its dual under right-multiplication by i_n.
std::vector<BladePair> blade_pairs(int n) {
  const int blades = blade_count(n);
  const Multivector in = pseudoscalar(n);
  std::vector<BladePair> pairs;
  std::vector<bool> used(blades, false);
  for (int i = 0; i < blades; ++i) {
    if (used[i]) continue;
    const Multivector prod = geometric_product(Multivector::blade(n, i), in);
    int partner = -1;
    double sign = 0.0;
    for (int j = 0; j < blades; ++j) {
      if (prod[j] != 0.0) {
        partner = j;
        sign = prod[j];
        break;
      }
    }
    used[i] = used[partner] = true;
    pairs.push_back({i, partner, sign});
  }
  return pairs;
}

// Signed DFT harmonic for a bin index (fftfreq convention).
int harmonic(int index, int count) {
  return index < (count + 1) / 2 ? index : index - count;
}

std::vector<int> shape_of(const GridSpec& g) {
  std::vector<int> shape(g.n);
  for (int k = 0; k < g.n; ++k) shape[k] = g.samples[k];
  return shape;
}

// Multiplies each bin by scale * e^{i * sign * w_m . x_min} in the packed
// complex representation (right-multiplication by e^{i_n a} is complex
// multiplication by e^{i a} in every blade pair plane).
void apply_bin_phase(std::vector<std::complex<double>>& z, const GridSpec& g,
                     int sign, double scale) {
  const std::size_t cells = z.size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const auto idx = g.unflatten(cell);
    double alpha = 0.0;
    for (int k = 0; k < g.n; ++k) {
      const double w =
          2.0 * std::numbers::pi * harmonic(idx[k], g.samples[k]) / g.length(k);
      alpha += w * g.x_min[k];
    }
    z[cell] *= scale * std::exp(std::complex<double>(0.0, sign * alpha));
  }
}

// Core transform shared by the spatial->spectral and spectral->spatial
// directions: packs blade pairs, runs FFTs, applies phases and scaling.
// kernel_sign is the sign of the exponent in e^{kernel_sign i_n w.x}.
void run_packed(const double* src, double* dst, const GridSpec& g,
                int kernel_sign, bool to_spectrum) {
  const std::size_t cells = g.cell_count();
  const auto pairs = blade_pairs(g.n);
  const auto shape = shape_of(g);
  const double spatial_scale = g.cell_volume();
  const double spectral_scale = 1.0 / g.volume();

  std::vector<std::complex<double>> z(cells);
  for (const BladePair& p : pairs) {
    const double* u = src + static_cast<std::size_t>(p.base) * cells;
    const double* w = src + static_cast<std::size_t>(p.partner) * cells;
    for (std::size_t c = 0; c < cells; ++c) {
      z[c] = std::complex<double>(u[c], p.sign * w[c]);
    }
    if (to_spectrum) {
      fft::transform(z, shape, kernel_sign);
      apply_bin_phase(z, g, kernel_sign, spatial_scale);
    } else {
      apply_bin_phase(z, g, kernel_sign, spectral_scale);
      fft::transform(z, shape, kernel_sign);
    }
    double* du = dst + static_cast<std::size_t>(p.base) * cells;
    double* dw = dst + static_cast<std::size_t>(p.partner) * cells;
    for (std::size_t c = 0; c < cells; ++c) {
      du[c] = z[c].real();
      dw[c] = p.sign * z[c].imag();
    }
  }
}

}  // namespace

SpectrumField::SpectrumField(const GridSpec& spatial_grid)
    : grid_(spatial_grid), cells_(spatial_grid.cell_count()) {
  grid_.validate();
  data_.assign(static_cast<std::size_t>(blades()) * cells_, 0.0);
}

double SpectrumField::omega(int axis, int index) const {
  return 2.0 * std::numbers::pi * harmonic(index, grid_.samples[axis]) /
         grid_.length(axis);
}

Vec SpectrumField::omega_at(std::size_t cell) const {
  const auto idx = grid_.unflatten(cell);
  Vec w{};
  for (int k = 0; k < grid_.n; ++k) w[k] = omega(k, idx[k]);
  return w;
}

double SpectrumField::bin_volume() const {
  double v = 1.0;
  for (int k = 0; k < grid_.n; ++k) {
    v *= 2.0 * std::numbers::pi / grid_.length(k);
  }
  return v;
}

Multivector SpectrumField::at(std::size_t cell) const {
  Multivector m(grid_.n);
  for (int b = 0; b < blades(); ++b) m[b] = plane(b)[cell];
  return m;
}

void SpectrumField::set(std::size_t cell, const Multivector& value) {
  if (value.dim() != grid_.n) {
    throw DimensionMismatch("sample dimension does not match spectrum grid");
  }
  for (int b = 0; b < blades(); ++b) plane(b)[cell] = value[b];
}

SpectrumField cft_forward_signed(const MultivectorField& f, int kernel_sign) {
  check_dimension(f.dim());
  SpectrumField F(f.grid());
  run_packed(f.raw().data(), F.raw().data(), f.grid(), kernel_sign, true);
  return F;
}

MultivectorField cft_inverse_signed(const SpectrumField& F, int kernel_sign) {
  check_dimension(F.dim());
  MultivectorField f(F.spatial_grid());
  run_packed(F.raw().data(), f.raw().data(), F.spatial_grid(), kernel_sign,
             false);
  return f;
}

SpectrumField cft_forward(const MultivectorField& f) {
  return cft_forward_signed(f, -1);
}

MultivectorField cft_inverse(const SpectrumField& F) {
  return cft_inverse_signed(F, +1);
}

double norm(const SpectrumField& F) {
  double acc = 0.0;
  for (const double v : F.raw()) acc += v * v;
  return std::sqrt(acc * F.bin_volume());
}

ParityReport cft_parity_behavior_check(const MultivectorField& f) {
  if (f.dim() != 2) {
    throw Error("parity behavior check applies to n=2 only");
  }
  ParityReport report;
  MultivectorField even(f.grid());
  MultivectorField odd(f.grid());
  for (std::size_t cell = 0; cell < f.cells(); ++cell) {
    const ParityParts parts = parity_split(f.at(cell));
    even.set(cell, parts.even);
    odd.set(cell, parts.odd);
  }
  const SpectrumField even_spec = cft_forward(even);
  const SpectrumField odd_spec = cft_forward(odd);
  for (std::size_t cell = 0; cell < f.cells(); ++cell) {
    const ParityParts pe = parity_split(even_spec.at(cell));
    const ParityParts po = parity_split(odd_spec.at(cell));
    report.max_leakage =
        std::max({report.max_leakage, modulus(pe.odd), modulus(po.even)});
  }
  report.even_norm = norm(even_spec);
  report.odd_norm = norm(odd_spec);
  report.total_norm = norm(cft_forward(f));
  return report;
}

}  // namespace clw
