// Independent reference implementations used only by tests: a brute-force
// blade multiplier driven by generator-list permutation/contraction rules,
// and literal direct-sum versions of the Clifford Fourier transform. These
// deliberately avoid the production code paths they certify.

#pragma once

#include <string>
#include <vector>

#include "clw/cft.hpp"
#include "clw/field.hpp"
#include "clw/multivector.hpp"

namespace oracle {

inline std::vector<int> generators_of(int n, int canonical_index) {
  const std::string name = clw::blade_name(n, canonical_index);
  std::vector<int> gens;
  if (name == "1") return gens;
  for (std::size_t i = 1; i < name.size(); ++i) gens.push_back(name[i] - '0');
  return gens;
}

struct BladeProduct {
  int index;
  double sign;
};

// e_A e_B by simulation: concatenate the generator lists, bubble-sort with a
// sign flip per swap, cancel equal neighbours (e_i e_i = +1), repeat.
inline BladeProduct blade_product(int n, int a, int b) {
  std::vector<int> gens = generators_of(n, a);
  const std::vector<int> right = generators_of(n, b);
  gens.insert(gens.end(), right.begin(), right.end());
  double sign = 1.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
      if (gens[i] > gens[i + 1]) {
        std::swap(gens[i], gens[i + 1]);
        sign = -sign;
        changed = true;
      } else if (gens[i] == gens[i + 1]) {
        gens.erase(gens.begin() + i, gens.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  std::string name = "e";
  for (int g : gens) name += static_cast<char>('0' + g);
  if (gens.empty()) name = "1";
  for (int i = 0; i < clw::blade_count(n); ++i) {
    if (clw::blade_name(n, i) == name) return {i, sign};
  }
  throw std::runtime_error("oracle: blade name lookup failed");
}

inline clw::Multivector geometric_product(const clw::Multivector& lhs,
                                          const clw::Multivector& rhs) {
  const int n = lhs.dim();
  clw::Multivector out(n);
  for (int i = 0; i < lhs.size(); ++i) {
    for (int j = 0; j < rhs.size(); ++j) {
      const BladeProduct p = blade_product(n, i, j);
      out[p.index] += p.sign * lhs[i] * rhs[j];
    }
  }
  return out;
}

// Literal Riemann sum of F(w) = integral f(x) e^{-i_n w.x} d^n x.
inline clw::SpectrumField cft_forward(const clw::MultivectorField& f) {
  const clw::GridSpec& grid = f.grid();
  clw::SpectrumField F(grid);
  const double dv = grid.cell_volume();
  for (std::size_t bin = 0; bin < F.cells(); ++bin) {
    const clw::Vec w = F.omega_at(bin);
    clw::Multivector acc(grid.n);
    for (std::size_t cell = 0; cell < f.cells(); ++cell) {
      const clw::Vec x = grid.point(cell);
      acc += clw::geometric_product(
          f.at(cell), clw::exp_pseudoscalar(grid.n, -clw::dot(w, x, grid.n)));
    }
    F.set(bin, acc * dv);
  }
  return F;
}

// Literal sum of f(x) = (2pi)^{-n} integral F(w) e^{+i_n w.x} d^n w.
inline clw::MultivectorField cft_inverse(const clw::SpectrumField& F) {
  const clw::GridSpec& grid = F.spatial_grid();
  clw::MultivectorField f(grid);
  const double scale =
      F.bin_volume() / std::pow(2.0 * 3.14159265358979323846, grid.n);
  for (std::size_t cell = 0; cell < f.cells(); ++cell) {
    const clw::Vec x = grid.point(cell);
    clw::Multivector acc(grid.n);
    for (std::size_t bin = 0; bin < F.cells(); ++bin) {
      const clw::Vec w = F.omega_at(bin);
      acc += clw::geometric_product(
          F.at(bin), clw::exp_pseudoscalar(grid.n, clw::dot(w, x, grid.n)));
    }
    f.set(cell, acc * scale);
  }
  return f;
}

}  // namespace oracle
