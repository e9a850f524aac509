// Mother and daughter wavelets, admissibility, the Clifford wavelet
// transform in direct and spectral form, synthesis, the reproducing kernel,
// and the Gabor family.
//
// Daughters are evaluated with the displacement x - b wrapped into the
// periodic box, so the discrete analysis is an exact circular correlation
// and the spectral path matches the direct path to round-off.

#pragma once

#include <functional>
#include <optional>

#include "clw/cft.hpp"
#include "clw/field.hpp"
#include "clw/simgroup.hpp"

namespace clw {

class MotherWavelet {
 public:
  // Wraps a sampled field; for n=2 the samples must be pure even-grade or
  // pure odd-grade (throws ParityViolation otherwise). Daughter values come
  // from multilinear interpolation with zero extension outside the box.
  static MotherWavelet from_field(const MultivectorField& field);

  // GA Gabor wavelet
  //   psi(x) = A / ((2pi)^{n/2} prod sigma_k) * exp(-1/2 sum x_k^2/sigma_k^2)
  //            * (e^{i_n w0.x} - exp(-1/2 sum sigma_k^2 w0k^2))
  // sampled on `grid`, with closed-form spatial and spectral evaluators
  // attached. The subtracted constant makes every component zero-mean.
  // For n=2 the amplitude A must be parity-pure. A zero w0 yields the zero
  // function, which later fails admissibility.
  static MotherWavelet gabor(const GridSpec& grid, const Vec& sigma,
                             const Vec& omega0, const Multivector& amplitude);

  const MultivectorField& field() const { return field_; }
  const GridSpec& grid() const { return field_.grid(); }
  int dim() const { return field_.dim(); }
  // +1 even-grade ("spinor"), -1 odd-grade ("vector"); always +1 for n=3.
  int parity() const { return parity_; }

  bool has_closed_form() const { return static_cast<bool>(spatial_); }
  // psi(y) anywhere in R^n: closed form when registered, otherwise
  // interpolation of the samples.
  Multivector eval(const Vec& y) const;
  bool has_spectrum() const { return static_cast<bool>(spectral_); }
  // Closed-form CFT psi^(w), when available.
  Multivector spectrum(const Vec& w) const;

 private:
  MultivectorField field_;
  std::function<Multivector(const Vec&)> spatial_;
  std::function<Multivector(const Vec&)> spectral_;
  int parity_ = 1;
};

// C_psi with the pieces the identities need. The SO(n) Haar measure is
// normalized to unit mass everywhere in this library, which divides the
// plain spectral integral by the sphere area |S^{n-1}| (2pi for n=2, 4pi
// for n=3); the group-side and frequency-side forms then agree.
struct AdmissibilityConstant {
  Multivector value;            // C_psi, grades {0,1}, reverse-invariant
  Multivector inverse;          // C_psi^{-1}
  Multivector c_prime;          // parity-adjusted constant used by synthesis
  Multivector c_prime_inverse;
  int parity = 1;
};

// Quadrature of C_psi = (1/|S^{n-1}|) integral psi^~ psi^ / |w|^n d^n w over
// the frequency grid, DC bin excluded. Throws NotAdmissible when a component
// mean is nonzero, when grades outside {0,1} appear, when <C>_0 <= 0, or
// when C is not invertible.
AdmissibilityConstant admissibility(const MotherWavelet& psi);

// psi_{a,theta,b}(x) = a^{-n/2} psi(r_theta^{-1}((x - b)/a)) sampled on the
// grid, with x - b wrapped into the periodic box.
MultivectorField daughter(const MotherWavelet& psi, const GroupPoint& g,
                          const GridSpec& grid);

// T_psi f(a,theta,b) = (f, psi_{a,theta,b}) evaluated node by node. The
// quartic-cost reference path; use transform_spectral at scale.
WaveletCoefficients transform_direct(const MotherWavelet& psi,
                                     const MultivectorField& f,
                                     const GroupGrid& grid);

// Same coefficients through the CFT representation: per (a,theta) one
// spectral product and one epsilon-signed inverse transform over b.
WaveletCoefficients transform_spectral(const MotherWavelet& psi,
                                       const MultivectorField& f,
                                       const GroupGrid& grid);

// f(x) = integral over G of T_psi f(a,theta,b) psi_{a,theta,b}(x) C'^{-1}
// dmu d^n b, accumulated per (a,theta) with an FFT over b.
MultivectorField inverse_transform(const WaveletCoefficients& coeffs,
                                   const MotherWavelet& psi,
                                   const AdmissibilityConstant& constant);

// K_psi(g; g') = (psi_g C'^{-1}, psi_{g'}) on the given grid.
Multivector reproducing_kernel(const MotherWavelet& psi,
                               const AdmissibilityConstant& constant,
                               const GroupPoint& g, const GroupPoint& g_prime,
                               const GridSpec& grid);

}  // namespace clw
