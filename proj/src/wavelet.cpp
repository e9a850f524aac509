#include "clw/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "clw/parallel.hpp"

namespace clw {

namespace {

// Zero-extended multilinear interpolation of a sampled field.
Multivector interpolate(const MultivectorField& field, const Vec& y) {
  const GridSpec& g = field.grid();
  const int n = g.n;
  std::array<int, 3> base{};
  std::array<double, 3> frac{};
  for (int k = 0; k < n; ++k) {
    const double t = (y[k] - g.x_min[k]) / g.spacing(k);
    const double fl = std::floor(t);
    base[k] = static_cast<int>(fl);
    frac[k] = t - fl;
  }
  Multivector acc(n);
  const int corners = 1 << n;
  for (int c = 0; c < corners; ++c) {
    double weight = 1.0;
    std::array<int, 3> idx{};
    bool inside = true;
    for (int k = 0; k < n; ++k) {
      const int off = (c >> k) & 1;
      idx[k] = base[k] + off;
      weight *= off ? frac[k] : 1.0 - frac[k];
      if (idx[k] < 0 || idx[k] >= g.samples[k]) inside = false;
    }
    if (!inside || weight == 0.0) continue;
    acc += field.at(g.flatten(idx)) * weight;
  }
  return acc;
}

// Parity of a sampled field: +1 even, -1 odd; throws for mixed n=2 content.
int infer_parity(const MultivectorField& field) {
  const int n = field.dim();
  double even2 = 0.0, odd2 = 0.0;
  for (int b = 0; b < field.blades(); ++b) {
    const double* p = field.plane(b);
    double acc = 0.0;
    for (std::size_t c = 0; c < field.cells(); ++c) acc += p[c] * p[c];
    if (blade_grade(n, b) % 2 == 0) {
      even2 += acc;
    } else {
      odd2 += acc;
    }
  }
  if (n != 2) return 1;
  const double total2 = even2 + odd2;
  const double tol2 = 1e-20 * total2;
  if (even2 > tol2 && odd2 > tol2) {
    throw ParityViolation(
        "n=2 mother wavelets must be pure even-grade or pure odd-grade");
  }
  return odd2 > even2 ? -1 : 1;
}

void check_transform_inputs(const MotherWavelet& psi, const MultivectorField& f,
                            const GroupGrid& grid) {
  if (psi.dim() != f.dim()) {
    throw DimensionMismatch("wavelet and signal dimensions differ");
  }
  check_same_grid(f.grid(), grid.translations);
}

}  // namespace

MotherWavelet MotherWavelet::from_field(const MultivectorField& field) {
  MotherWavelet psi;
  psi.field_ = field;
  psi.parity_ = infer_parity(field);
  return psi;
}

MotherWavelet MotherWavelet::gabor(const GridSpec& grid, const Vec& sigma,
                                   const Vec& omega0,
                                   const Multivector& amplitude) {
  grid.validate();
  const int n = grid.n;
  if (amplitude.dim() != n) {
    throw DimensionMismatch("amplitude dimension does not match grid");
  }
  for (int k = 0; k < n; ++k) {
    if (!(sigma[k] > 0.0)) throw Error("gabor sigma components must be > 0");
  }
  if (n == 2) {
    const ParityParts parts = parity_split(amplitude);
    if (modulus(parts.even) > 0.0 && modulus(parts.odd) > 0.0) {
      throw ParityViolation("n=2 gabor amplitude must be parity-pure");
    }
  }

  double sigma_prod = 1.0;
  double carrier2 = 0.0;
  for (int k = 0; k < n; ++k) {
    sigma_prod *= sigma[k];
    carrier2 += sigma[k] * sigma[k] * omega0[k] * omega0[k];
  }
  const double scale =
      1.0 / (std::pow(2.0 * std::numbers::pi, n / 2.0) * sigma_prod);
  const double mean_correction = std::exp(-0.5 * carrier2);
  const Multivector amp_i = geometric_product(amplitude, pseudoscalar(n));

  auto spatial = [=](const Vec& x) {
    double q = 0.0;
    for (int k = 0; k < n; ++k) q += x[k] * x[k] / (sigma[k] * sigma[k]);
    const double envelope = scale * std::exp(-0.5 * q);
    const double phase = dot(omega0, x, n);
    return (amplitude * (std::cos(phase) - mean_correction) +
            amp_i * std::sin(phase)) *
           envelope;
  };
  auto spectral = [=](const Vec& w) {
    double q_shift = 0.0, q_plain = 0.0;
    for (int k = 0; k < n; ++k) {
      const double s2 = sigma[k] * sigma[k];
      q_shift += s2 * (w[k] - omega0[k]) * (w[k] - omega0[k]);
      q_plain += s2 * w[k] * w[k];
    }
    return amplitude *
           (std::exp(-0.5 * q_shift) - mean_correction * std::exp(-0.5 * q_plain));
  };

  MotherWavelet psi;
  psi.field_ = MultivectorField::sample(grid, spatial);
  psi.spatial_ = spatial;
  psi.spectral_ = spectral;
  psi.parity_ = infer_parity(psi.field_);
  return psi;
}

Multivector MotherWavelet::eval(const Vec& y) const {
  if (spatial_) return spatial_(y);
  return interpolate(field_, y);
}

Multivector MotherWavelet::spectrum(const Vec& w) const {
  if (!spectral_) throw Error("mother wavelet has no closed-form spectrum");
  return spectral_(w);
}

MultivectorField daughter(const MotherWavelet& psi, const GroupPoint& g,
                          const GridSpec& grid) {
  grid.validate();
  if (psi.dim() != grid.n) {
    throw DimensionMismatch("wavelet and grid dimensions differ");
  }
  const double amplitude = std::pow(g.a, -grid.n / 2.0);
  const Rotation inv_rot = g.rot.inverse();
  MultivectorField out(grid);
  for (std::size_t cell = 0; cell < out.cells(); ++cell) {
    Vec d = grid.point(cell);
    for (int k = 0; k < grid.n; ++k) d[k] -= g.b[k];
    d = grid.wrap(d);
    for (int k = 0; k < grid.n; ++k) d[k] /= g.a;
    out.set(cell, psi.eval(inv_rot.apply(d)) * amplitude);
  }
  return out;
}

AdmissibilityConstant admissibility(const MotherWavelet& psi) {
  const MultivectorField& field = psi.field();
  const int n = field.dim();
  const SpectrumField spectrum = cft_forward(field);

  // Zero mean per blade component, checked at the DC bin.
  const double psi_norm = norm(field);
  const double tau_mean = 1e-8 * psi_norm * std::sqrt(field.grid().volume());
  for (int b = 0; b < field.blades(); ++b) {
    const double mean = std::abs(spectrum.plane(b)[spectrum.dc_cell()]);
    if (mean > tau_mean) {
      throw NotAdmissible("component " + blade_name(n, b) +
                          " has nonzero mean " + std::to_string(mean));
    }
  }

  const double sphere_area = n == 2 ? 2.0 * std::numbers::pi
                                    : 4.0 * std::numbers::pi;
  Multivector constant(n);
  for (std::size_t cell = 0; cell < spectrum.cells(); ++cell) {
    if (cell == spectrum.dc_cell()) continue;
    const Vec w = spectrum.omega_at(cell);
    const Multivector value = spectrum.at(cell);
    constant += geometric_product(reverse(value), value) *
                (1.0 / std::pow(std::sqrt(dot(w, w, n)), n));
  }
  constant *= spectrum.bin_volume() / sphere_area;

  if (!std::isfinite(modulus(constant))) {
    throw NotAdmissible("admissibility integral is not finite");
  }
  Multivector higher(n);
  for (int k = 2; k <= n; ++k) higher += grade_project(constant, k);
  if (modulus(higher) > 1e-8 * modulus(constant)) {
    throw NotAdmissible("admissibility constant has grade >= 2 content");
  }
  constant = grade_project(constant, 0) + grade_project(constant, 1);
  if (!(constant[0] > 0.0)) {
    throw NotAdmissible("admissibility constant has nonpositive scalar part");
  }

  AdmissibilityConstant out;
  out.value = constant;
  try {
    out.inverse = invert_grade01(constant);
  } catch (const Error& e) {
    throw NotAdmissible(std::string("admissibility constant not invertible: ") +
                        e.what());
  }
  out.parity = psi.parity();
  // Parity factor epsilon^n: +1 in every supported case (even n squares the
  // parity away; n=3 forces epsilon = +1).
  const double sign = (n % 2 == 0) ? 1.0 : static_cast<double>(out.parity);
  out.c_prime = out.value * sign;
  out.c_prime_inverse = out.inverse * sign;
  return out;
}

WaveletCoefficients transform_direct(const MotherWavelet& psi,
                                     const MultivectorField& f,
                                     const GroupGrid& grid) {
  check_transform_inputs(psi, f, grid);
  WaveletCoefficients coeffs(grid);
  const std::size_t slices = grid.scale_count() * grid.rotation_count();
  parallel_for(slices, [&](std::size_t s) {
    const std::size_t j = s / grid.rotation_count();
    const std::size_t k = s % grid.rotation_count();
    for (std::size_t cell = 0; cell < coeffs.cells(); ++cell) {
      const MultivectorField d =
          daughter(psi, grid.point(j, k, cell), grid.translations);
      coeffs.set(j, k, cell, inner_product(f, d));
    }
  });
  return coeffs;
}

WaveletCoefficients transform_spectral(const MotherWavelet& psi,
                                       const MultivectorField& f,
                                       const GroupGrid& grid) {
  check_transform_inputs(psi, f, grid);
  const int epsilon = psi.parity();
  const SpectrumField f_hat = cft_forward(f);
  WaveletCoefficients coeffs(grid);
  const std::size_t slices = grid.scale_count() * grid.rotation_count();
  parallel_for(slices, [&](std::size_t s) {
    const std::size_t j = s / grid.rotation_count();
    const std::size_t k = s % grid.rotation_count();
    GroupPoint g;
    g.a = grid.scales[j];
    g.rot = grid.rotations[k];
    const MultivectorField d = daughter(psi, g, grid.translations);
    const SpectrumField d_hat = cft_forward(d);
    SpectrumField product(grid.translations);
    for (std::size_t cell = 0; cell < product.cells(); ++cell) {
      product.set(cell,
                  geometric_product(f_hat.at(cell), reverse(d_hat.at(cell))));
    }
    coeffs.set_slice(j, k, cft_inverse_signed(product, epsilon));
  });
  return coeffs;
}

MultivectorField inverse_transform(const WaveletCoefficients& coeffs,
                                   const MotherWavelet& psi,
                                   const AdmissibilityConstant& constant) {
  const GroupGrid& grid = coeffs.grid();
  if (psi.dim() != coeffs.dim()) {
    throw DimensionMismatch("wavelet and coefficient dimensions differ");
  }
  if (psi.parity() != constant.parity) {
    throw Error("admissibility constant was computed for a different parity");
  }
  const int epsilon = psi.parity();
  const std::size_t slices = grid.scale_count() * grid.rotation_count();

  // Per-worker partial sums, reduced in worker order; the result does not
  // depend on scheduling for a fixed thread count.
  const int workers =
      static_cast<int>(std::min<std::size_t>(slices, thread_count()));
  std::vector<MultivectorField> partials(
      std::max(workers, 1), MultivectorField(grid.translations));
  auto accumulate_slice = [&](std::size_t s, MultivectorField& acc) {
    const std::size_t j = s / grid.rotation_count();
    const std::size_t k = s % grid.rotation_count();
    const SpectrumField u = cft_forward_signed(coeffs.slice_field(j, k), -epsilon);
    GroupPoint g;
    g.a = grid.scales[j];
    g.rot = grid.rotations[k];
    const MultivectorField d = daughter(psi, g, grid.translations);
    const SpectrumField d_hat = cft_forward(d);
    SpectrumField product(grid.translations);
    for (std::size_t cell = 0; cell < product.cells(); ++cell) {
      product.set(cell, geometric_product(u.at(cell), d_hat.at(cell)));
    }
    acc += cft_inverse(product) * grid.mu_weight(j, k);
  };
  if (workers <= 1) {
    for (std::size_t s = 0; s < slices; ++s) accumulate_slice(s, partials[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t s = t; s < slices; s += workers) {
          accumulate_slice(s, partials[t]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  MultivectorField out = partials[0];
  for (int t = 1; t < workers; ++t) out += partials[t];
  return out.scale_right(constant.c_prime_inverse);
}

Multivector reproducing_kernel(const MotherWavelet& psi,
                               const AdmissibilityConstant& constant,
                               const GroupPoint& g, const GroupPoint& g_prime,
                               const GridSpec& grid) {
  const MultivectorField d1 = daughter(psi, g, grid);
  const MultivectorField d2 = daughter(psi, g_prime, grid);
  return inner_product(d1.scale_right(constant.c_prime_inverse), d2);
}

}  // namespace clw
