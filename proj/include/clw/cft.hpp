// Clifford Fourier transform with the pseudoscalar kernel e^{-i_n w.x}.
//
// The kernel multiplies from the right, so each blade e_A pairs with its
// dual e_A i_n into one complex plane (right-multiplication by i_n acts as
// the complex unit there); the transform then reduces to 2^{n-1} standard
// complex FFTs. For n = 2 the pairs (1,e12) and (e1,e2) stay inside one
// parity class, so even and odd grades never mix.

#pragma once

#include "clw/field.hpp"

namespace clw {

// Multivector samples on the DFT-dual frequency grid of a spatial GridSpec.
// Bins follow DFT layout: index m maps to the signed harmonic m (m < N/2)
// or m - N (m >= N/2), at angular frequency 2*pi*harmonic / length(axis).
class SpectrumField {
 public:
  SpectrumField() = default;
  explicit SpectrumField(const GridSpec& spatial_grid);

  const GridSpec& spatial_grid() const { return grid_; }
  int dim() const { return grid_.n; }
  int blades() const { return blade_count(grid_.n); }
  std::size_t cells() const { return cells_; }

  double omega(int axis, int index) const;
  Vec omega_at(std::size_t cell) const;
  // Frequency-space quadrature weight: prod_k (2*pi / length(k)).
  double bin_volume() const;
  std::size_t dc_cell() const { return 0; }

  Multivector at(std::size_t cell) const;
  void set(std::size_t cell, const Multivector& value);

  double* plane(int blade) { return data_.data() + blade * cells_; }
  const double* plane(int blade) const { return data_.data() + blade * cells_; }
  const std::vector<double>& raw() const { return data_; }
  std::vector<double>& raw() { return data_; }

 private:
  GridSpec grid_;
  std::size_t cells_ = 0;
  std::vector<double> data_;
};

// F(w) = integral of f(x) e^{-i_n w.x} d^n x, approximated by the scaled DFT
// of the samples with the x_min phase correction.
SpectrumField cft_forward(const MultivectorField& f);

// f(x) = (2pi)^{-n} integral of F(w) e^{+i_n w.x} d^n w. Exact inverse of
// cft_forward up to round-off on any grid.
MultivectorField cft_inverse(const SpectrumField& F);

// Generalized kernels used by the wavelet transform's parity bookkeeping:
// cft_forward_signed(f, s)  = integral f(x) e^{s i_n w.x} d^n x
// cft_inverse_signed(F, s)  = (2pi)^{-n} integral F(w) e^{s i_n w.x} d^n w
// with cft_forward == signed(-1) and cft_inverse == signed(+1).
SpectrumField cft_forward_signed(const MultivectorField& f, int kernel_sign);
MultivectorField cft_inverse_signed(const SpectrumField& F, int kernel_sign);

// ||F||^2 = sum_m |F(w_m)|^2 * bin_volume; Plancherel pairs this with
// (2pi)^n ||f||^2.
double norm(const SpectrumField& F);

struct ParityReport {
  double max_leakage = 0.0;  // worst cross-parity magnitude in the spectrum
  double even_norm = 0.0;    // ||even-grade input part|| in the spectrum
  double odd_norm = 0.0;
  double total_norm = 0.0;
};

// Confirms that the n=2 CFT preserves even and odd grades: transforms each
// parity component separately and measures the opposite-parity magnitude.
ParityReport cft_parity_behavior_check(const MultivectorField& f);

}  // namespace clw
