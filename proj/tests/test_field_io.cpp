#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "clw/clwf_io.hpp"
#include "clw/field.hpp"
#include "clw/verify.hpp"

using clw::GridSpec;
using clw::Multivector;
using clw::MultivectorField;
using clw::Vec;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("grid geometry") {
  const GridSpec g = GridSpec::centered_cube(2, 16.0, 64);
  CHECK(g.spacing(0) == doctest::Approx(0.25));
  CHECK(g.cell_count() == 64 * 64);
  CHECK(g.cell_volume() == doctest::Approx(0.0625));
  CHECK(g.point(0)[0] == doctest::Approx(-8.0));
  const auto idx = g.unflatten(g.cell_count() - 1);
  CHECK(idx[0] == 63);
  CHECK(idx[1] == 63);
  CHECK(g.flatten(idx) == g.cell_count() - 1);
  // Periodic wrap maps displacements into [-L/2, L/2).
  CHECK(g.wrap(Vec{8.0, 0, 0})[0] == doctest::Approx(-8.0));
  CHECK(g.wrap(Vec{-8.1, 0, 0})[0] == doctest::Approx(7.9));
  CHECK_THROWS_AS(GridSpec::centered_cube(2, -1.0, 8), clw::Error);
}

TEST_CASE("inner product basics") {
  GridSpec g;
  g.n = 2;
  g.x_min = {0.0, 0.0, 0.0};
  g.x_max = {1.0, 1.0, 0.0};
  g.samples = {8, 8, 0};

  const auto ones = MultivectorField::sample(
      g, [](const Vec&) { return Multivector::scalar(2, 1.0); });
  const auto e1_field = MultivectorField::sample(
      g, [](const Vec&) { return Multivector::basis_vector(2, 0); });

  // (1, e1) = 1 * reverse(e1) * volume = e1 on the unit box.
  const Multivector ip = clw::inner_product(ones, e1_field);
  CHECK(clw::modulus(ip - Multivector::basis_vector(2, 0)) <= 1e-14);

  // Self inner product has nonnegative scalar part.
  clw::Rng rng(3);
  const auto f = clw::random_field(g, rng);
  CHECK(clw::grade_project(clw::inner_product(f, f), 0)[0] >= 0.0);

  // Disjointly supported fields have zero inner product.
  const auto left = MultivectorField::sample(g, [](const Vec& x) {
    return Multivector::scalar(2, x[0] < 0.5 ? 1.0 : 0.0);
  });
  const auto right = MultivectorField::sample(g, [](const Vec& x) {
    return Multivector::scalar(2, x[0] < 0.5 ? 0.0 : 1.0);
  });
  CHECK(clw::modulus(clw::inner_product(left, right)) == 0.0);
}

TEST_CASE("norm basics and properties") {
  GridSpec g;
  g.n = 2;
  g.x_min = {0.0, 0.0, 0.0};
  g.x_max = {2.0, 3.0, 0.0};
  g.samples = {16, 16, 0};

  CHECK(clw::norm(MultivectorField(g)) == 0.0);
  Multivector c = clw::parse_multivector(2, "1:1,e12:-2");
  const auto constant = MultivectorField::sample(g, [&](const Vec&) { return c; });
  CHECK(clw::norm(constant) ==
        doctest::Approx(clw::modulus(c) * std::sqrt(6.0)).epsilon(1e-14));

  clw::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = clw::random_field(g, rng);
    const auto h = clw::random_field(g, rng);
    CHECK(clw::norm(f + h) <= clw::norm(f) + clw::norm(h) + 1e-12);
    // (f,g) = reverse((g,f)).
    const Multivector fg = clw::inner_product(f, h);
    const Multivector gf = clw::inner_product(h, f);
    CHECK(clw::modulus(fg - clw::reverse(gf)) <= 1e-12 * clw::modulus(fg));
  }
}

TEST_CASE("Riemann sum of a Gaussian matches the analytic integral") {
  for (int n : {2, 3}) {
    const int samples = n == 2 ? 64 : 64;
    const GridSpec g = GridSpec::centered_cube(n, 13.0, samples);  // > 6 sigma
    const auto f = MultivectorField::sample(g, [n](const Vec& x) {
      return Multivector::scalar(n, std::exp(-0.5 * clw::dot(x, x, n)));
    });
    double sum = 0.0;
    const double* plane = f.plane(0);
    for (std::size_t cell = 0; cell < f.cells(); ++cell) sum += plane[cell];
    sum *= g.cell_volume();
    const double expected = std::pow(2.0 * std::numbers::pi, n / 2.0);
    CHECK(std::abs(sum - expected) / expected <= 1e-8);
  }
}

TEST_CASE("field algebra") {
  const GridSpec g = GridSpec::centered_cube(2, 8.0, 16);
  clw::Rng rng(23);
  const auto f = clw::random_field(g, rng);

  CHECK(clw::norm(f + f * -1.0) == 0.0);

  // Left multiplication by i_n preserves the norm.
  const auto scaled = f.scale_left(clw::pseudoscalar(2));
  CHECK(clw::norm(scaled) == doctest::Approx(clw::norm(f)).epsilon(1e-13));

  // Pointwise parity split recombines to the identity.
  const auto even = f.map([](const Multivector& m) { return clw::parity_split(m).even; });
  const auto odd = f.map([](const Multivector& m) { return clw::parity_split(m).odd; });
  CHECK(clw::norm(even + odd - f) == 0.0);

  const GridSpec other = GridSpec::centered_cube(2, 8.0, 8);
  CHECK_THROWS_AS(clw::inner_product(f, MultivectorField(other)),
                  clw::GridMismatch);
}

TEST_CASE("CLWF round trip is bit exact") {
  const GridSpec g = GridSpec::centered_cube(3, 4.0, 6);
  clw::Rng rng(29);
  const auto f = clw::random_field(g, rng);
  const std::string path = temp_path("clw_test_field.clwf");
  clw::write_field(path, f);
  const auto back = clw::read_field(path);
  REQUIRE(back.raw().size() == f.raw().size());
  for (std::size_t i = 0; i < f.raw().size(); ++i) {
    CHECK(back.raw()[i] == f.raw()[i]);
  }
  CHECK(clw::peek_domain(path) == clw::FieldDomain::kSpatial);
  std::filesystem::remove(path);
}

TEST_CASE("CLWF rejects corruption") {
  const GridSpec g = GridSpec::centered_cube(2, 4.0, 4);
  clw::Rng rng(31);
  const auto f = clw::random_field(g, rng);
  const std::string path = temp_path("clw_test_corrupt.clwf");
  clw::write_field(path, f);

  SUBCASE("wrong magic") {
    std::fstream io(path, std::ios::binary | std::ios::in | std::ios::out);
    io.seekp(0);
    io.write("NOPE", 4);
    io.close();
    CHECK_THROWS_AS(clw::read_field(path), clw::IoError);
  }
  SUBCASE("wrong version") {
    std::fstream io(path, std::ios::binary | std::ios::in | std::ios::out);
    io.seekp(4);
    const char version[4] = {9, 0, 0, 0};
    io.write(version, 4);
    io.close();
    CHECK_THROWS_AS(clw::read_field(path), clw::IoError);
  }
  SUBCASE("flipped payload byte fails the checksum") {
    std::fstream io(path, std::ios::binary | std::ios::in | std::ios::out);
    io.seekp(64);
    char byte;
    io.seekg(64);
    io.read(&byte, 1);
    byte ^= 0x40;
    io.seekp(64);
    io.write(&byte, 1);
    io.close();
    CHECK_THROWS_AS(clw::read_field(path), clw::IoError);
  }
  SUBCASE("truncated file") {
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 9);
    CHECK_THROWS_AS(clw::read_field(path), clw::IoError);
  }
  SUBCASE("spatial reader refuses a spectrum") {
    CHECK_THROWS_AS(clw::read_spectrum(path), clw::IoError);
  }
  std::filesystem::remove(path);
}

TEST_CASE("coefficients container round trip") {
  const GridSpec g = GridSpec::centered_cube(2, 4.0, 8);
  const clw::GroupGrid group = clw::build_group_grid(0.5, 2.0, 3, 4, g);
  clw::WaveletCoefficients coeffs(group);
  clw::Rng rng(37);
  for (double& v : coeffs.raw()) v = rng.gaussian();

  const std::string path = temp_path("clw_test_coeffs.clwc");
  clw::write_coefficients(path, coeffs, -1);
  const clw::CoefficientsFile back = clw::read_coefficients(path);
  CHECK(back.parity == -1);
  CHECK(back.coefficients.grid().compatible(coeffs.grid()));
  REQUIRE(back.coefficients.raw().size() == coeffs.raw().size());
  for (std::size_t i = 0; i < coeffs.raw().size(); ++i) {
    CHECK(back.coefficients.raw()[i] == coeffs.raw()[i]);
  }
  CHECK(std::filesystem::exists(path + ".meta"));
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".meta");
}
