#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "clw/verify.hpp"
#include "clw/wavelet.hpp"

using clw::AdmissibilityConstant;
using clw::GridSpec;
using clw::GroupGrid;
using clw::GroupPoint;
using clw::MotherWavelet;
using clw::Multivector;
using clw::MultivectorField;
using clw::Rotation;
using clw::Vec;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent admissibility quadrature from the closed-form spectrum: the
// same bin sum the library performs, but bypassing the sampled field and the
// FFT entirely.
Multivector admissibility_from_spectrum(const MotherWavelet& psi,
                                        const GridSpec& grid) {
  const int n = grid.n;
  const clw::SpectrumField layout(grid);
  Multivector acc(n);
  for (std::size_t cell = 1; cell < layout.cells(); ++cell) {
    const Vec w = layout.omega_at(cell);
    if (cell == layout.dc_cell()) continue;
    const Multivector value = psi.spectrum(w);
    acc += clw::geometric_product(clw::reverse(value), value) *
           (1.0 / std::pow(std::sqrt(clw::dot(w, w, n)), n));
  }
  const double sphere = n == 2 ? 2 * kPi : 4 * kPi;
  return acc * (layout.bin_volume() / sphere);
}

}  // namespace

TEST_CASE("gabor construction and parity rules") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 64);
  const MotherWavelet even = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 1.0));
  CHECK(even.parity() == 1);
  const MotherWavelet odd = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::basis_vector(2, 0));
  CHECK(odd.parity() == -1);
  CHECK_THROWS_AS(
      MotherWavelet::gabor(grid, Vec{1, 1, 0}, Vec{3, 0, 0},
                           clw::parse_multivector(2, "1:1,e1:1")),
      clw::ParityViolation);
  CHECK_THROWS_AS(MotherWavelet::gabor(grid, Vec{0.0, 1, 0}, Vec{3, 0, 0},
                                       Multivector::scalar(2, 1.0)),
                  clw::Error);

  // n=3 has no parity restriction.
  const GridSpec grid3 = GridSpec::centered_cube(3, 16.0, 16);
  const MotherWavelet mixed = MotherWavelet::gabor(
      grid3, Vec{1, 1, 1}, Vec{2, 0, 0}, clw::parse_multivector(3, "1:1,e1:1"));
  CHECK(mixed.parity() == 1);
}

TEST_CASE("daughter at the identity reproduces the mother") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 32);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 1.0));
  const MultivectorField d = clw::daughter(psi, GroupPoint{}, grid);
  CHECK(clw::norm(d - psi.field()) <= 1e-14 * clw::norm(psi.field()));
}

TEST_CASE("daughter norm identity and spectral representation") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 64);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{5, 0, 0}, Multivector::scalar(2, 1.0));
  std::vector<GroupPoint> points;
  for (double a : {0.75, 1.0, 1.3}) {
    for (double theta : {0.0, 1.1}) {
      for (Vec b : {Vec{0, 0, 0}, Vec{1.0, -0.5, 0}}) {
        points.push_back({a, Rotation::so2(theta), b});
      }
    }
  }
  CHECK(clw::daughter_norm_error(psi, points, grid) <= 1e-6);
  CHECK(clw::daughter_spectral_error(psi, points, grid) <= 1e-6);
}

TEST_CASE("interpolated daughters track the closed form") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 64);
  const MotherWavelet analytic = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 1.0));
  // Same samples but no closed form: daughters fall back to interpolation.
  const MotherWavelet sampled = MotherWavelet::from_field(analytic.field());
  CHECK_FALSE(sampled.has_closed_form());
  const GroupPoint g{1.21, Rotation::so2(0.6), Vec{0.8, -0.4, 0}};
  const MultivectorField da = clw::daughter(analytic, g, grid);
  const MultivectorField ds = clw::daughter(sampled, g, grid);
  // Multilinear interpolation of a smooth wavelet on this grid is accurate
  // to a few times 1e-3 in L2; this guards the interpolation path, the
  // closed form is the reference.
  CHECK(clw::norm(ds - da) / clw::norm(da) <= 5e-3);
}

TEST_CASE("admissibility constant matches the frozen goldens") {
  // Golden values computed with an independent quadrature over the same
  // frequency bins (analytic Gabor spectrum, trapezoid-free plain sum).
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 64);

  const MotherWavelet psi3 = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 1.0));
  const AdmissibilityConstant c3 = clw::admissibility(psi3);
  CHECK(std::abs(c3.value[0] - 0.063297245927732) <= 1e-9);
  CHECK(clw::modulus(c3.value - clw::grade_project(c3.value, 0)) <=
        1e-12 * c3.value[0]);

  const MotherWavelet psi5 = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{5, 0, 0}, Multivector::scalar(2, 1.0));
  const AdmissibilityConstant c5 = clw::admissibility(psi5);
  CHECK(std::abs(c5.value[0] - 0.020873237275982) <= 1e-9);

  const GridSpec grid3 = GridSpec::centered_cube(3, 16.0, 32);
  const MotherWavelet psi_3d = MotherWavelet::gabor(
      grid3, Vec{1, 1, 1}, Vec{2, 0, 0}, Multivector::scalar(3, 1.0));
  const AdmissibilityConstant c_3d = clw::admissibility(psi_3d);
  CHECK(std::abs(c_3d.value[0] - 0.0637428691564448) <= 1e-6);

  // In-test independent oracle: same bins, analytic spectrum, no FFT.
  const Multivector oracle2 = admissibility_from_spectrum(psi3, grid);
  CHECK(clw::modulus(c3.value - oracle2) <= 1e-9 * clw::modulus(oracle2));
  const Multivector oracle3 = admissibility_from_spectrum(psi_3d, grid3);
  CHECK(clw::modulus(c_3d.value - oracle3) <= 1e-6 * clw::modulus(oracle3));
}

TEST_CASE("admissibility structure and rejection") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 64);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 1.0));
  const AdmissibilityConstant c = clw::admissibility(psi);

  CHECK(clw::modulus(c.value - clw::reverse(c.value)) <= 1e-14);
  CHECK(c.value[0] > 0.0);
  CHECK(clw::modulus(clw::geometric_product(c.value, c.inverse) -
                     Multivector::scalar(2, 1.0)) <= 1e-10);
  CHECK(clw::modulus(c.c_prime - c.value) == 0.0);  // epsilon^2 = 1

  // A plain Gaussian violates the zero-mean condition.
  const MultivectorField gauss = MultivectorField::sample(grid, [](const Vec& x) {
    return Multivector::scalar(2, std::exp(-0.5 * clw::dot(x, x, 2)));
  });
  CHECK_THROWS_AS(clw::admissibility(MotherWavelet::from_field(gauss)),
                  clw::NotAdmissible);

  // omega0 = 0 collapses the Gabor to the zero function: not admissible.
  const MotherWavelet degenerate = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{0, 0, 0}, Multivector::scalar(2, 1.0));
  CHECK(clw::norm(degenerate.field()) == 0.0);
  CHECK_THROWS_AS(clw::admissibility(degenerate), clw::NotAdmissible);

  // C is quadratic in the wavelet: scaling A by s scales C by s^2.
  const MotherWavelet scaled = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 2.5));
  CHECK(clw::admissibility(scaled).value[0] ==
        doctest::Approx(2.5 * 2.5 * c.value[0]).epsilon(1e-12));
}

TEST_CASE("group-side and frequency-side admissibility quadratures agree") {
  // The group-side form integrates a^n psi^~ psi^(a r^{-1} w) against
  // da dnu(theta)/a^{n+1} with the unit-mass rotation measure; it must
  // reproduce the frequency-side constant for any fixed w. This pins the
  // 1/|S^{n-1}| normalization.
  const GridSpec grid2 = GridSpec::centered_cube(2, 16.0, 64);
  const MotherWavelet psi2 = MotherWavelet::gabor(
      grid2, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 1.0));
  const double c2 = clw::admissibility(psi2).value[0];

  auto group_side = [](const MotherWavelet& psi, const Vec& w, double a_lo,
                       double a_hi, int scale_nodes,
                       const std::vector<Rotation>& rots) {
    const int n = psi.dim();
    const double step = std::log(a_hi / a_lo) / scale_nodes;
    Multivector acc(n);
    for (int j = 0; j < scale_nodes; ++j) {
      const double a = a_lo * std::exp((j + 0.5) * step);
      const double weight = step * std::pow(a, -n) * std::pow(a, n);
      for (const Rotation& r : rots) {
        Vec arg = r.inverse().apply(w);
        for (int k = 0; k < n; ++k) arg[k] *= a;
        const Multivector v = psi.spectrum(arg);
        acc += clw::geometric_product(clw::reverse(v), v) *
               (weight / static_cast<double>(rots.size()));
      }
    }
    return acc;
  };

  std::vector<Rotation> circle;
  for (int k = 0; k < 512; ++k) circle.push_back(Rotation::so2(2 * kPi * k / 512));
  for (const Vec w : {Vec{1.3, 0.4, 0}, Vec{-2.0, 2.5, 0}}) {
    const Multivector via_group = group_side(psi2, w, 1e-3, 1e3, 4000, circle);
    CHECK(std::abs(via_group[0] - c2) / c2 <= 1e-6);
  }

  // n=3: equal-weight quasi-uniform rotors; QMC-limited tolerance.
  const GridSpec grid3 = GridSpec::centered_cube(3, 16.0, 32);
  const MotherWavelet psi3 = MotherWavelet::gabor(
      grid3, Vec{1, 1, 1}, Vec{2, 0, 0}, Multivector::scalar(3, 1.0));
  const double c3 = clw::admissibility(psi3).value[0];
  const GroupGrid sampler = clw::build_group_grid(
      0.5, 2.0, 1, 4096, GridSpec::centered_cube(3, 8.0, 4));
  const Multivector via_group3 =
      group_side(psi3, Vec{1.1, 0.7, -0.4}, 1e-3, 1e3, 2000, sampler.rotations);
  CHECK(std::abs(via_group3[0] - c3) / c3 <= 2e-2);
}

TEST_CASE("transform of the mother at the identity node") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 32);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{3, 0, 0}, Multivector::scalar(2, 1.0));
  // [0.5, 2] with one midpoint node puts a = 1 on the grid exactly.
  const GroupGrid group = clw::build_group_grid(0.5, 2.0, 1, 1, grid);
  CHECK(group.scales[0] == doctest::Approx(1.0));

  const clw::WaveletCoefficients t = clw::transform_direct(psi, psi.field(), group);
  const std::size_t b0 = grid.flatten({16, 16, 0});
  const double expected = clw::norm(psi.field()) * clw::norm(psi.field());
  CHECK(clw::grade_project(t.at(0, 0, b0), 0)[0] ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("transform is left linear in the signal") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 16);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{2, 0, 0}, Multivector::scalar(2, 1.0));
  const GroupGrid group = clw::build_group_grid(0.5, 2.0, 2, 3, grid);
  clw::Rng rng(71);
  const MultivectorField f = clw::random_band_field(grid, 0.8, 2.0, 3, rng);
  const MultivectorField g = clw::random_band_field(grid, 0.8, 2.0, 3, rng);
  const Multivector l1 = rng.multivector(2);
  const Multivector l2 = rng.multivector(2);

  const MultivectorField combo = f.scale_left(l1) + g.scale_left(l2);
  const auto t_combo = clw::transform_spectral(psi, combo, group);
  const auto t_f = clw::transform_spectral(psi, f, group);
  const auto t_g = clw::transform_spectral(psi, g, group);

  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < group.scale_count(); ++j) {
    for (std::size_t k = 0; k < group.rotation_count(); ++k) {
      for (std::size_t cell = 0; cell < t_combo.cells(); ++cell) {
        const Multivector expected =
            clw::geometric_product(l1, t_f.at(j, k, cell)) +
            clw::geometric_product(l2, t_g.at(j, k, cell));
        worst = std::max(worst, clw::modulus(t_combo.at(j, k, cell) - expected));
        scale = std::max(scale, clw::modulus(expected));
      }
    }
  }
  CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("direct and spectral transforms agree") {
  for (int n : {2, 3}) {
    const int count = n == 2 ? 16 : 12;
    const GridSpec grid = GridSpec::centered_cube(n, 16.0, count);
    const Vec omega0 = n == 2 ? Vec{2, 0, 0} : Vec{1.5, 0, 0};
    const MotherWavelet psi =
        MotherWavelet::gabor(grid, Vec{1, 1, 1}, omega0,
                             Multivector::scalar(n, 1.0));
    const GroupGrid group = clw::build_group_grid(0.5, 2.0, 4, 4, grid);
    clw::Rng rng(73 + n);
    const MultivectorField f = clw::random_band_field(grid, 0.8, 2.0, 3, rng);
    CHECK(clw::direct_vs_spectral_error(psi, f, group) <= 1e-8);
  }
}

TEST_CASE("zero signal and zero coefficients") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 16);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{2, 0, 0}, Multivector::scalar(2, 1.0));
  const GroupGrid group = clw::build_group_grid(0.5, 2.0, 2, 2, grid);
  const auto t = clw::transform_spectral(psi, MultivectorField(grid), group);
  double acc = 0.0;
  for (double v : t.raw()) acc += std::abs(v);
  CHECK(acc == 0.0);

  const AdmissibilityConstant c = clw::admissibility(psi);
  const MultivectorField rec =
      clw::inverse_transform(clw::WaveletCoefficients(group), psi, c);
  CHECK(clw::norm(rec) == 0.0);
}

TEST_CASE("inversion reconstructs a band-limited signal") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 32);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{2.5, 0, 0}, Multivector::scalar(2, 1.0));
  const AdmissibilityConstant c = clw::admissibility(psi);
  const GroupGrid group = clw::build_group_grid(0.5, 4.0, 16, 16, grid);
  clw::Rng rng(79);
  const MultivectorField f = clw::random_band_field(grid, 1.4, 2.2, 4, rng);
  CHECK(clw::inversion_error(psi, c, f, group) <= 0.1);
}

TEST_CASE("n=3 norm relation holds with the parity-adjusted constant") {
  const GridSpec grid = GridSpec::centered_cube(3, 16.0, 24);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 1}, Vec{2, 0, 0}, Multivector::scalar(3, 1.0));
  const AdmissibilityConstant c = clw::admissibility(psi);
  const GroupGrid group = clw::build_group_grid(0.5, 4.0, 12, 64, grid);
  clw::Rng rng(83);
  const MultivectorField f = clw::random_band_field(grid, 1.2, 1.8, 3, rng);
  CHECK(clw::norm_relation_error(psi, c, f, group) <= 5e-2);
}

TEST_CASE("reproducing kernel") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 16);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{2, 0, 0}, Multivector::scalar(2, 1.0));
  const AdmissibilityConstant c = clw::admissibility(psi);

  const GroupPoint g1{1.0, Rotation::so2(0.4), Vec{0.5, -0.5, 0}};
  const GroupPoint g2{1.4, Rotation::so2(2.0), Vec{-1.0, 0.25, 0}};

  // K(g,g) has a positive scalar part for a scalar constant.
  const Multivector diag = clw::reproducing_kernel(psi, c, g1, g1, grid);
  CHECK(clw::grade_project(diag, 0)[0] > 0.0);

  // Swapping the arguments reverses the kernel.
  const Multivector forward = clw::reproducing_kernel(psi, c, g1, g2, grid);
  const Multivector backward = clw::reproducing_kernel(psi, c, g2, g1, grid);
  CHECK(clw::modulus(forward - clw::reverse(backward)) <=
        1e-12 * clw::modulus(forward));
}

TEST_CASE("kernel integral equals analysis of the synthesis") {
  // The suite evaluates Eq.-(30)-style reproduction as T[f_rec](g'); on a
  // tiny instance the explicit kernel quadrature must give the same values.
  const GridSpec grid = GridSpec::centered_cube(2, 12.0, 8);
  const MotherWavelet psi = MotherWavelet::gabor(
      grid, Vec{1.2, 1.2, 0}, Vec{1.5, 0, 0}, Multivector::scalar(2, 1.0));
  const AdmissibilityConstant c = clw::admissibility(psi);
  const GroupGrid group = clw::build_group_grid(0.6, 1.8, 2, 2, grid);
  clw::Rng rng(89);
  const MultivectorField f = clw::random_band_field(grid, 0.7, 1.6, 2, rng);

  const clw::WaveletCoefficients t = clw::transform_spectral(psi, f, group);
  const MultivectorField rec = clw::inverse_transform(t, psi, c);

  const GroupPoint probe = group.point(1, 1, grid.flatten({5, 2, 0}));
  Multivector via_kernel(2);
  const double db = grid.cell_volume();
  for (std::size_t j = 0; j < group.scale_count(); ++j) {
    for (std::size_t k = 0; k < group.rotation_count(); ++k) {
      for (std::size_t cell = 0; cell < t.cells(); ++cell) {
        const Multivector kernel = clw::reproducing_kernel(
            psi, c, group.point(j, k, cell), probe, grid);
        via_kernel += clw::geometric_product(t.at(j, k, cell), kernel) *
                      (group.mu_weight(j, k) * db);
      }
    }
  }
  const Multivector via_analysis =
      clw::inner_product(rec, clw::daughter(psi, probe, grid));
  CHECK(clw::modulus(via_kernel - via_analysis) <=
        1e-10 * clw::modulus(via_analysis));
}

TEST_CASE("inverse transform rejects a mismatched parity constant") {
  const GridSpec grid = GridSpec::centered_cube(2, 16.0, 16);
  const MotherWavelet even_psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{2, 0, 0}, Multivector::scalar(2, 1.0));
  const MotherWavelet odd_psi = MotherWavelet::gabor(
      grid, Vec{1, 1, 0}, Vec{2, 0, 0}, Multivector::basis_vector(2, 0));
  const AdmissibilityConstant c_odd = clw::admissibility(odd_psi);
  const GroupGrid group = clw::build_group_grid(0.5, 2.0, 2, 2, grid);
  const clw::WaveletCoefficients t =
      clw::transform_spectral(even_psi, even_psi.field(), group);
  CHECK_THROWS_AS(clw::inverse_transform(t, even_psi, c_odd), clw::Error);
}
