#include "clw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace clw {

namespace {

constexpr double kPi = std::numbers::pi;

// Index of the grid point nearest to y; y must land on the (periodic) grid.
std::size_t cell_of_point(const GridSpec& grid, const Vec& y) {
  std::array<int, 3> idx{};
  for (int k = 0; k < grid.n; ++k) {
    const double t = (y[k] - grid.x_min[k]) / grid.spacing(k);
    const long long r = std::llround(t);
    if (std::abs(t - r) > 1e-6) {
      throw Error("point does not land on a grid node");
    }
    const int nk = grid.samples[k];
    idx[k] = static_cast<int>(((r % nk) + nk) % nk);
  }
  return grid.flatten(idx);
}

std::size_t shifted_cell(const GridSpec& grid, std::size_t cell,
                         const std::array<int, 3>& shift) {
  auto idx = grid.unflatten(cell);
  for (int k = 0; k < grid.n; ++k) {
    const int nk = grid.samples[k];
    idx[k] = ((idx[k] + shift[k]) % nk + nk) % nk;
  }
  return grid.flatten(idx);
}

double max_coefficient_modulus(const WaveletCoefficients& w) {
  double best = 0.0;
  for (std::size_t j = 0; j < w.grid().scale_count(); ++j) {
    for (std::size_t k = 0; k < w.grid().rotation_count(); ++k) {
      for (std::size_t c = 0; c < w.cells(); ++c) {
        best = std::max(best, modulus(w.at(j, k, c)));
      }
    }
  }
  return best;
}

std::size_t find_rotation(const GroupGrid& grid, const Rotation& r) {
  for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
    if (grid.rotations[k].approx_equal(r, 1e-9)) return k;
  }
  throw Error("composed rotation is not a grid node");
}

Vec grid_center(const GridSpec& grid) {
  Vec c{};
  for (int k = 0; k < grid.n; ++k) c[k] = 0.5 * (grid.x_min[k] + grid.x_max[k]);
  return c;
}

// || b T ||^2_{L^2(G)} with b measured from the grid center.
double position_variance_term(const WaveletCoefficients& w) {
  const GroupGrid& grid = w.grid();
  const GridSpec& tr = grid.translations;
  const Vec center = grid_center(tr);
  const double db = tr.cell_volume();
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      double slice = 0.0;
      for (std::size_t c = 0; c < w.cells(); ++c) {
        const Vec b = tr.point(c);
        double b2 = 0.0;
        for (int ax = 0; ax < tr.n; ++ax) {
          const double d = b[ax] - center[ax];
          b2 += d * d;
        }
        const Multivector t = w.at(j, k, c);
        slice += b2 * scalar_product(t, t);
      }
      acc += slice * grid.mu_weight(j, k) * db;
    }
  }
  return acc;
}

}  // namespace

double Rng::uniform(double lo, double hi) {
  const double t =
      static_cast<double>(engine_()) / static_cast<double>(engine_.max());
  return lo + t * (hi - lo);
}

double Rng::gaussian() {
  // Box-Muller; keeps results independent of library internals.
  double u1 = 0.0;
  do {
    u1 = static_cast<double>(engine_()) / static_cast<double>(engine_.max());
  } while (u1 <= 1e-300);
  const double u2 =
      static_cast<double>(engine_()) / static_cast<double>(engine_.max());
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Multivector Rng::multivector(int n) {
  Multivector m(n);
  for (int i = 0; i < m.size(); ++i) m[i] = gaussian();
  return m;
}

MultivectorField random_band_field(const GridSpec& grid, double omega_lo,
                                   double omega_hi, int bumps, Rng& rng,
                                   int parity) {
  SpectrumField spectrum(grid);
  const int n = grid.n;
  for (int bump = 0; bump < bumps; ++bump) {
    Vec dir{};
    if (n == 2) {
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      dir = {std::cos(phi), std::sin(phi), 0.0};
    } else {
      double mag2 = 0.0;
      do {
        for (int k = 0; k < 3; ++k) dir[k] = rng.gaussian();
        mag2 = dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2];
      } while (mag2 < 1e-12);
      const double mag = std::sqrt(mag2);
      for (int k = 0; k < 3; ++k) dir[k] /= mag;
    }
    const double radius = rng.uniform(omega_lo, omega_hi);
    const double width = rng.uniform(0.35, 0.45);
    Multivector amp = rng.multivector(n);
    if (parity != 0) {
      const ParityParts parts = parity_split(amp);
      amp = parity > 0 ? parts.even : parts.odd;
    }
    Vec center{};
    for (int k = 0; k < n; ++k) center[k] = radius * dir[k];
    for (std::size_t cell = 0; cell < spectrum.cells(); ++cell) {
      const Vec w = spectrum.omega_at(cell);
      double d2 = 0.0;
      for (int k = 0; k < n; ++k) d2 += (w[k] - center[k]) * (w[k] - center[k]);
      const double profile = std::exp(-0.5 * d2 / (width * width));
      if (profile < 1e-14) continue;
      spectrum.set(cell, spectrum.at(cell) + amp * profile);
    }
  }
  MultivectorField f = cft_inverse(spectrum);
  const double scale = norm(f);
  if (scale > 0.0) f *= 1.0 / scale;
  return f;
}

MultivectorField random_field(const GridSpec& grid, Rng& rng) {
  MultivectorField f(grid);
  for (double& v : f.raw()) v = rng.gaussian();
  return f;
}

MultivectorField translate_samples(const MultivectorField& f,
                                   const std::array<int, 3>& shift_cells) {
  const GridSpec& grid = f.grid();
  MultivectorField out(grid);
  std::array<int, 3> neg{};
  for (int k = 0; k < grid.n; ++k) neg[k] = -shift_cells[k];
  for (std::size_t cell = 0; cell < f.cells(); ++cell) {
    out.set(cell, f.at(shifted_cell(grid, cell, neg)));
  }
  return out;
}

MultivectorField rotate_argument(const MultivectorField& f, const Rotation& r0) {
  const GridSpec& grid = f.grid();
  MultivectorField out(grid);
  for (std::size_t cell = 0; cell < f.cells(); ++cell) {
    const Vec y = r0.apply(grid.point(cell));
    out.set(cell, f.at(cell_of_point(grid, y)));
  }
  return out;
}

double plancherel_max_error(const GridSpec& grid, int field_count,
                            std::uint64_t seed) {
  Rng rng(seed);
  const double factor = std::pow(2.0 * kPi, -grid.n);
  double worst = 0.0;
  for (int i = 0; i < field_count; ++i) {
    const MultivectorField f = random_field(grid, rng);
    const double spatial = norm(f);
    const double spectral = norm(cft_forward(f));
    const double err =
        std::abs(spatial * spatial - factor * spectral * spectral) /
        (spatial * spatial);
    worst = std::max(worst, err);
  }
  return worst;
}

double parity_preservation_leakage(const GridSpec& grid, std::uint64_t seed) {
  Rng rng(seed);
  const MultivectorField f = random_field(grid, rng);
  return cft_parity_behavior_check(f).max_leakage;
}

double direct_vs_spectral_error(const MotherWavelet& psi,
                                const MultivectorField& f,
                                const GroupGrid& grid) {
  const WaveletCoefficients direct = transform_direct(psi, f, grid);
  const WaveletCoefficients spectral = transform_spectral(psi, f, grid);
  const double scale = max_coefficient_modulus(direct);
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      for (std::size_t c = 0; c < direct.cells(); ++c) {
        worst = std::max(worst,
                         modulus(direct.at(j, k, c) - spectral.at(j, k, c)));
      }
    }
  }
  return worst / scale;
}

double covariance_translation_error(const MotherWavelet& psi,
                                    const MultivectorField& f,
                                    const GroupGrid& grid,
                                    const std::array<int, 3>& shift_cells) {
  const WaveletCoefficients base = transform_spectral(psi, f, grid);
  const WaveletCoefficients shifted =
      transform_spectral(psi, translate_samples(f, shift_cells), grid);
  std::array<int, 3> neg{};
  for (int k = 0; k < grid.translations.n; ++k) neg[k] = -shift_cells[k];
  const double scale = max_coefficient_modulus(base);
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      for (std::size_t c = 0; c < base.cells(); ++c) {
        const Multivector expected =
            base.at(j, k, shifted_cell(grid.translations, c, neg));
        worst = std::max(worst, modulus(shifted.at(j, k, c) - expected));
      }
    }
  }
  return worst / scale;
}

double covariance_rotation_error(const MotherWavelet& psi,
                                 const MultivectorField& f,
                                 const GroupGrid& grid, const Rotation& r0) {
  const WaveletCoefficients base = transform_spectral(psi, f, grid);
  const WaveletCoefficients rotated =
      transform_spectral(psi, rotate_argument(f, r0), grid);
  const double scale = max_coefficient_modulus(base);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
    const std::size_t k_prime = find_rotation(grid, r0.compose(grid.rotations[k]));
    for (std::size_t j = 0; j < grid.scale_count(); ++j) {
      for (std::size_t c = 0; c < base.cells(); ++c) {
        const Vec rb = r0.apply(grid.translations.point(c));
        const Multivector expected =
            base.at(j, k_prime, cell_of_point(grid.translations, rb));
        worst = std::max(worst, modulus(rotated.at(j, k, c) - expected));
      }
    }
  }
  return worst / scale;
}

double covariance_dilation_error(const MotherWavelet& psi,
                                 const std::function<Multivector(const Vec&)>& f,
                                 const GroupGrid& grid, double c, int scale_step) {
  const GridSpec& tr = grid.translations;
  const int n = tr.n;
  for (std::size_t j = 0; j + scale_step < grid.scale_count(); ++j) {
    const double ratio = grid.scales[j + scale_step] / grid.scales[j];
    if (std::abs(ratio - c) > 1e-9 * c) {
      throw Error("dilation factor does not match the scale grid step");
    }
  }
  const MultivectorField base = MultivectorField::sample(tr, f);
  const MultivectorField dilated = MultivectorField::sample(tr, [&](const Vec& x) {
    Vec cx{};
    for (int k = 0; k < n; ++k) cx[k] = c * x[k];
    return f(cx);
  });
  const WaveletCoefficients t_base = transform_spectral(psi, base, grid);
  const WaveletCoefficients t_dilated = transform_spectral(psi, dilated, grid);

  const std::size_t b0 = cell_of_point(tr, Vec{0.0, 0.0, 0.0});
  const double factor = std::pow(c, -n / 2.0);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j + scale_step < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      const Multivector expected = t_base.at(j + scale_step, k, b0) * factor;
      scale = std::max(scale, modulus(expected));
      worst = std::max(worst, modulus(t_dilated.at(j, k, b0) - expected));
    }
  }
  return worst / scale;
}

double daughter_norm_error(const MotherWavelet& psi,
                           const std::vector<GroupPoint>& points,
                           const GridSpec& grid) {
  const double reference = norm(psi.field());
  double worst = 0.0;
  for (const GroupPoint& g : points) {
    const double n_d = norm(daughter(psi, g, grid));
    worst = std::max(worst, std::abs(n_d - reference) / reference);
  }
  return worst;
}

double daughter_spectral_error(const MotherWavelet& psi,
                               const std::vector<GroupPoint>& points,
                               const GridSpec& grid) {
  if (!psi.has_spectrum()) {
    throw Error("spectral representation check needs a closed-form spectrum");
  }
  const int n = grid.n;
  double worst = 0.0;
  for (const GroupPoint& g : points) {
    const SpectrumField measured = cft_forward(daughter(psi, g, grid));
    const double amplitude = std::pow(g.a, n / 2.0);
    const Rotation inv_rot = g.rot.inverse();
    double sup_expected = 0.0;
    double sup_diff = 0.0;
    for (std::size_t cell = 0; cell < measured.cells(); ++cell) {
      const Vec w = measured.omega_at(cell);
      Vec arg = inv_rot.apply(w);
      for (int k = 0; k < n; ++k) arg[k] *= g.a;
      const Multivector expected =
          geometric_product(psi.spectrum(arg) * amplitude,
                            exp_pseudoscalar(n, -dot(g.b, w, n)));
      sup_expected = std::max(sup_expected, modulus(expected));
      sup_diff = std::max(sup_diff, modulus(measured.at(cell) - expected));
    }
    worst = std::max(worst, sup_diff / sup_expected);
  }
  return worst;
}

double inner_product_relation_error(const MotherWavelet& psi,
                                    const AdmissibilityConstant& constant,
                                    const MultivectorField& f,
                                    const MultivectorField& g,
                                    const GroupGrid& grid) {
  const WaveletCoefficients tf = transform_spectral(psi, f, grid);
  const WaveletCoefficients tg = transform_spectral(psi, g, grid);
  const Multivector lhs = l2g_inner_product(tf, tg);
  const Multivector rhs = inner_product(f.scale_right(constant.c_prime), g);
  return modulus(lhs - rhs) / modulus(rhs);
}

double norm_relation_error(const MotherWavelet& psi,
                           const AdmissibilityConstant& constant,
                           const MultivectorField& f, const GroupGrid& grid) {
  const WaveletCoefficients tf = transform_spectral(psi, f, grid);
  const double lhs = l2g_norm(tf);
  const double rhs =
      grade_project(inner_product(f.scale_right(constant.c_prime), f), 0)[0];
  return std::abs(lhs * lhs - rhs) / std::abs(rhs);
}

double inversion_error(const MotherWavelet& psi,
                       const AdmissibilityConstant& constant,
                       const MultivectorField& f, const GroupGrid& grid) {
  const WaveletCoefficients coeffs = transform_spectral(psi, f, grid);
  const MultivectorField rec = inverse_transform(coeffs, psi, constant);
  return norm(rec - f) / norm(f);
}

double reproducing_kernel_error(const MotherWavelet& psi,
                                const AdmissibilityConstant& constant,
                                const MultivectorField& f,
                                const GroupGrid& grid, int probe_count,
                                std::uint64_t seed) {
  const WaveletCoefficients coeffs = transform_spectral(psi, f, grid);
  const MultivectorField rec = inverse_transform(coeffs, psi, constant);
  const double floor = 0.2 * max_coefficient_modulus(coeffs);

  // Informative probes only: reproducing a near-zero coefficient to a
  // relative tolerance is noise, not signal.
  Rng rng(seed);
  double worst = 0.0;
  int found = 0;
  int attempts = 0;
  while (found < probe_count && attempts < 100000) {
    ++attempts;
    const auto j = static_cast<std::size_t>(
        rng.uniform(0.0, static_cast<double>(grid.scale_count()) - 1e-9));
    const auto k = static_cast<std::size_t>(
        rng.uniform(0.0, static_cast<double>(grid.rotation_count()) - 1e-9));
    const auto cell = static_cast<std::size_t>(
        rng.uniform(0.0, static_cast<double>(coeffs.cells()) - 1e-9));
    const Multivector expected = coeffs.at(j, k, cell);
    if (modulus(expected) < floor) continue;
    ++found;
    // integral of T(g) K(g; g') dlambda == analysis of the synthesis at g'.
    const Multivector reproduced = inner_product(
        rec, daughter(psi, grid.point(j, k, cell), grid.translations));
    worst = std::max(worst, modulus(reproduced - expected) / modulus(expected));
  }
  if (found == 0) throw Error("no informative probe nodes found");
  return worst;
}

UncertaintyReport check_uncertainty_general(const MotherWavelet& psi,
                                            const AdmissibilityConstant& constant,
                                            const MultivectorField& f,
                                            const GroupGrid& grid) {
  const int n = f.dim();
  UncertaintyReport report;
  const WaveletCoefficients coeffs = transform_spectral(psi, f, grid);
  report.position_term = position_variance_term(coeffs);

  const SpectrumField f_hat = cft_forward(f);
  Multivector moment(n);
  for (std::size_t cell = 0; cell < f_hat.cells(); ++cell) {
    const Vec w = f_hat.omega_at(cell);
    Multivector w_mv(n);
    for (int k = 0; k < n; ++k) w_mv += Multivector::basis_vector(n, k) * w[k];
    const Multivector wf = geometric_product(w_mv, f_hat.at(cell));
    moment += geometric_product(wf, reverse(wf));
  }
  moment *= f_hat.bin_volume();
  report.frequency_term =
      grade_project(geometric_product(constant.value, moment), 0)[0];

  const double energy =
      grade_project(geometric_product(constant.value, inner_product(f, f)), 0)[0];
  report.lhs = report.position_term * report.frequency_term;
  report.rhs = n * std::pow(2.0 * kPi, n) / 4.0 * energy * energy;
  report.degenerate = !(report.rhs > 0.0);
  report.ratio = report.degenerate ? 0.0 : report.lhs / report.rhs;
  return report;
}

UncertaintyReport check_uncertainty_scalar(const MotherWavelet& psi,
                                           const AdmissibilityConstant& constant,
                                           const MultivectorField& f,
                                           const GroupGrid& grid) {
  const int n = f.dim();
  const double vector_part = modulus(grade_project(constant.value, 1));
  if (vector_part > 1e-8 * modulus(constant.value)) {
    throw NonScalarConstant("admissibility constant has a vector part of size " +
                            std::to_string(vector_part));
  }
  UncertaintyReport report;
  const WaveletCoefficients coeffs = transform_spectral(psi, f, grid);
  report.position_term = position_variance_term(coeffs);

  const SpectrumField f_hat = cft_forward(f);
  double moment = 0.0;
  for (std::size_t cell = 0; cell < f_hat.cells(); ++cell) {
    const Vec w = f_hat.omega_at(cell);
    const Multivector value = f_hat.at(cell);
    moment += dot(w, w, n) * scalar_product(value, value);
  }
  report.frequency_term = moment * f_hat.bin_volume();

  const double f_norm = norm(f);
  report.lhs = report.position_term * report.frequency_term;
  report.rhs = n * constant.value[0] * std::pow(2.0 * kPi, n) / 4.0 *
               std::pow(f_norm, 4);
  report.degenerate = !(report.rhs > 0.0);
  report.ratio = report.degenerate ? 0.0 : report.lhs / report.rhs;
  return report;
}

double integrated_frequency_variance(const WaveletCoefficients& coeffs) {
  const GroupGrid& grid = coeffs.grid();
  const double factor = std::pow(2.0 * kPi, -grid.translations.n);
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      const SpectrumField slice_hat = cft_forward(coeffs.slice_field(j, k));
      double slice = 0.0;
      for (std::size_t cell = 0; cell < slice_hat.cells(); ++cell) {
        const Vec w = slice_hat.omega_at(cell);
        const Multivector value = slice_hat.at(cell);
        slice += dot(w, w, grid.translations.n) * scalar_product(value, value);
      }
      acc += slice * slice_hat.bin_volume() * factor * grid.mu_weight(j, k);
    }
  }
  return acc;
}

void Report::add(const std::string& name, double measured, double tolerance,
                 const std::string& note) {
  checks.push_back({name, measured, tolerance, measured <= tolerance, note});
}

bool Report::all_pass() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::write(std::ostream& out) const {
  for (const std::string& line : header) out << "# " << line << "\n";
  for (const CheckResult& c : checks) {
    out << c.name << "  " << c.measured << "  " << c.tolerance << "  "
        << (c.pass ? "PASS" : "FAIL");
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
}

Report run_identity_suite(const SuiteConfig& config) {
  const int n = config.n;
  check_dimension(n);
  Report report;
  {
    std::ostringstream line;
    line << "clwave identity suite: n=" << n << " grid=" << config.grid_samples
         << "^" << n << " extent=" << config.extent << " scales=["
         << config.a_min << "," << config.a_max << "]x" << config.scale_count
         << " rotations=" << config.rotation_count << " seed=" << config.seed;
    report.header.push_back(line.str());
  }
  report.header.push_back(
      "uncertainty frequency term evaluated as Sc(C (w f^, w f^)) with the "
      "L2 inner product (w f^, w f^) = integral (w f^)(w f^)~ dw");

  const GridSpec grid =
      GridSpec::centered_cube(n, config.extent, config.grid_samples);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, config.sigma, config.omega0, Multivector::scalar(n, 1.0));
  const AdmissibilityConstant constant = admissibility(psi);
  const GroupGrid group = build_group_grid(config.a_min, config.a_max,
                                           config.scale_count,
                                           config.rotation_count, grid);

  // Admissibility structure.
  report.add("admissibility-reverse-invariance",
             modulus(constant.value - reverse(constant.value)) /
                 modulus(constant.value),
             1e-12);
  {
    Multivector higher(n);
    for (int k = 2; k <= n; ++k) higher += grade_project(constant.value, k);
    report.add("admissibility-grade-content",
               modulus(higher) / modulus(constant.value), 1e-8);
    report.add("admissibility-scalar-positive",
               constant.value[0] > 0.0 ? 0.0 : 1.0, 0.0,
               "<C>_0 = " + std::to_string(constant.value[0]));
    report.add("admissibility-inverse",
               modulus(geometric_product(constant.value, constant.inverse) -
                       Multivector::scalar(n, 1.0)),
               1e-10);
  }
  {
    // A plain Gaussian has nonzero component means and must be rejected.
    const MultivectorField gauss =
        MultivectorField::sample(grid, [n](const Vec& x) {
          return Multivector::scalar(n, std::exp(-0.5 * dot(x, x, n)));
        });
    bool rejected = false;
    try {
      admissibility(MotherWavelet::from_field(gauss));
    } catch (const NotAdmissible&) {
      rejected = true;
    }
    report.add("gaussian-rejected", rejected ? 0.0 : 1.0, 0.0);
  }

  // Daughter norm identity and spectral representation at in-band points.
  {
    std::vector<GroupPoint> points;
    std::vector<Rotation> rots;
    if (n == 2) {
      rots = {Rotation::so2(0.0), Rotation::so2(0.9), Rotation::so2(3.7)};
    } else {
      rots = {Rotation::identity(3),
              Rotation::so3_axis_angle({0, 0, 1}, 1.1),
              Rotation::so3_axis_angle({1, 1, 0}, 2.0)};
    }
    const std::vector<double> scales = {0.75, 1.0, 1.3};
    const std::vector<Vec> shifts = {
        Vec{0, 0, 0}, Vec{1.0, 0.25, -0.5}, Vec{-0.75, 0.5, 0.25}};
    for (const double a : scales) {
      for (const Rotation& r : rots) {
        for (const Vec& b : shifts) {
          points.push_back({a, r, b});
        }
      }
    }
    report.add("daughter-norm-identity", daughter_norm_error(psi, points, grid),
               1e-6);
    report.add("daughter-spectral-representation",
               daughter_spectral_error(psi, points, grid), 1e-6);
  }

  // CFT-level properties.
  {
    const GridSpec small = GridSpec::centered_cube(n, config.extent,
                                                   n == 2 ? 32 : 16);
    report.add("plancherel", plancherel_max_error(small, 50, config.seed + 1),
               1e-10);
    if (n == 2) {
      report.add("parity-preservation",
                 parity_preservation_leakage(small, config.seed + 2), 1e-14);
    }
  }

  // Cross-path equivalence on its own pinned desk instance.
  {
    const int count = n == 2 ? 16 : 12;
    const GridSpec small = GridSpec::centered_cube(n, 16.0, count);
    const Vec omega_small = n == 2 ? Vec{2.0, 0.0, 0.0} : Vec{1.5, 0.0, 0.0};
    const MotherWavelet psi_small = MotherWavelet::gabor(
        small, config.sigma, omega_small, Multivector::scalar(n, 1.0));
    const GroupGrid group_small = build_group_grid(0.5, 2.0, 4, 4, small);
    Rng rng(config.seed + 3);
    const MultivectorField f_small = random_band_field(small, 0.8, 2.0, 3, rng);
    report.add("direct-vs-spectral",
               direct_vs_spectral_error(psi_small, f_small, group_small), 1e-8);
  }

  Rng rng(config.seed + 4);
  const MultivectorField f =
      random_band_field(grid, config.band_lo, config.band_hi, 4, rng);
  const MultivectorField g =
      random_band_field(grid, config.band_lo, config.band_hi, 4, rng);

  // Covariances on the main profile.
  {
    std::array<int, 3> shift{};
    shift[0] = config.grid_samples / 4;
    shift[1] = config.grid_samples / 8;
    report.add("covariance-translation",
               covariance_translation_error(psi, f, group, shift), 1e-8);
  }
  {
    if (n == 2) {
      if (config.rotation_count % 4 != 0) {
        throw Error("n=2 rotation covariance check needs 4 | rotation count");
      }
      report.add("covariance-rotation",
                 covariance_rotation_error(psi, f, group,
                                           Rotation::so2(kPi / 2)),
                 1e-8);
    } else {
      const GridSpec small = GridSpec::centered_cube(3, config.extent, 16);
      const MotherWavelet psi_small = MotherWavelet::gabor(
          small, config.sigma, Vec{1.5, 0, 0}, Multivector::scalar(3, 1.0));
      const GroupGrid octa = build_group_grid(0.7, 2.0, 3, 24, small,
                                              RotationSampling::kOctahedral);
      Rng rng3(config.seed + 5);
      const MultivectorField f3 = random_band_field(small, 0.8, 1.8, 3, rng3);
      report.add("covariance-rotation",
                 covariance_rotation_error(
                     psi_small, f3, octa,
                     Rotation::so3_axis_angle({0, 0, 1}, kPi / 2)),
                 1e-8);
    }
  }
  {
    const int step = config.scale_count / 4;
    const double c = std::pow(config.a_max / config.a_min,
                              static_cast<double>(step) / config.scale_count);
    Rng rng_atoms(config.seed + 6);
    // Analytic signal for the dilation check: f(c x) must be resampled from
    // the closed form, not permuted.
    std::vector<std::array<double, 10>> atoms;
    for (int i = 0; i < 3; ++i) {
      std::array<double, 10> atom{};
      for (int k = 0; k < n; ++k) atom[k] = rng_atoms.uniform(-0.8, 0.8);
      for (int k = 0; k < n; ++k) atom[3 + k] = rng_atoms.uniform(2.0, 3.5) *
                                                (rng_atoms.uniform(0, 1) < 0.5
                                                     ? -1.0
                                                     : 1.0);
      atom[6] = rng_atoms.uniform(1.0, 1.6);  // envelope width
      atom[7] = rng_atoms.gaussian();         // scalar amplitude
      atom[8] = rng_atoms.gaussian();         // pseudoscalar-pair amplitude
      atoms.push_back(atom);
    }
    auto analytic = [n, atoms](const Vec& x) {
      Multivector acc(n);
      for (const auto& atom : atoms) {
        double q = 0.0, phase = 0.0;
        for (int k = 0; k < n; ++k) {
          const double d = x[k] - atom[k];
          q += d * d / (atom[6] * atom[6]);
          phase += atom[3 + k] * x[k];
        }
        const double envelope = std::exp(-0.5 * q);
        Multivector term = Multivector::scalar(n, atom[7] * std::cos(phase));
        term += pseudoscalar(n) * (atom[8] * std::sin(phase));
        acc += term * envelope;
      }
      return acc;
    };
    report.add("covariance-dilation",
               covariance_dilation_error(psi, analytic, group, c, step), 1e-8,
               "c = " + std::to_string(c));
  }

  // Inner-product and norm relations.
  report.add("inner-product-relation",
             inner_product_relation_error(psi, constant, f, g, group), 2e-2);
  report.add("norm-relation", norm_relation_error(psi, constant, f, group),
             2e-2);

  // Inversion and reproducing kernel on the pinned dense group grid.
  {
    const GroupGrid dense =
        build_group_grid(config.a_min, config.a_max, config.inversion_scales,
                         config.inversion_rotations, grid);
    report.add("inversion", inversion_error(psi, constant, f, dense), 5e-2);
    report.add("reproducing-kernel",
               reproducing_kernel_error(psi, constant, f, dense, 25,
                                        config.seed + 7),
               5e-2);
  }

  // Uncertainty principles over the random signal suite.
  {
    Rng rng_u(config.seed + 8);
    double min_general = 1e300;
    double min_scalar = 1e300;
    for (int i = 0; i < config.uncertainty_signals; ++i) {
      const int parity = n == 2 ? (i % 2 == 0 ? 1 : -1) : 0;
      const MultivectorField s = random_band_field(
          grid, config.band_lo, config.band_hi, 3, rng_u, parity);
      min_general =
          std::min(min_general,
                   check_uncertainty_general(psi, constant, s, group).ratio);
      min_scalar =
          std::min(min_scalar,
                   check_uncertainty_scalar(psi, constant, s, group).ratio);
    }
    report.add("uncertainty-general", std::max(0.0, 1.0 - min_general), 1e-6,
               "min ratio = " + std::to_string(min_general));
    report.add("uncertainty-scalar", std::max(0.0, 1.0 - min_scalar), 1e-6,
               "min ratio = " + std::to_string(min_scalar));
  }
  if (n == 2) {
    // The coefficient frequency variance must not depend on the wavelet
    // parity: compare a spinor and a vector Gabor with |A| = 1.
    const MotherWavelet psi_odd = MotherWavelet::gabor(
        grid, config.sigma, config.omega0, Multivector::basis_vector(n, 0));
    Rng rng_e(config.seed + 9);
    const MultivectorField s =
        random_band_field(grid, config.band_lo, config.band_hi, 3, rng_e);
    const double var_even =
        integrated_frequency_variance(transform_spectral(psi, s, group));
    const double var_odd =
        integrated_frequency_variance(transform_spectral(psi_odd, s, group));
    report.add("epsilon-independence",
               std::abs(var_even - var_odd) / var_even, 1e-10);
  }

  return report;
}

}  // namespace clw
