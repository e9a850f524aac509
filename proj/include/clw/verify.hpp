// Numerical certification of the transform's identities: covariances, the
// inner-product and norm relations, inversion, the reproducing kernel,
// Plancherel, parity preservation, and both uncertainty principles. Every
// check returns a measured error; run_identity_suite assembles them into a
// pass/fail report against the documented tolerances.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "clw/wavelet.hpp"

namespace clw {

// Deterministic random source for test signals (fixed seeds, own gaussian so
// results do not depend on library distribution internals).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi);
  double gaussian();
  Multivector multivector(int n);

 private:
  std::mt19937_64 engine_;
};

// Band-limited multivector signal: Gaussian bumps with random multivector
// amplitudes placed in the spectral annulus |w| in [omega_lo, omega_hi],
// then transformed to space. parity: 0 = mixed, +1/-1 = projected (n=2).
MultivectorField random_band_field(const GridSpec& grid, double omega_lo,
                                   double omega_hi, int bumps, Rng& rng,
                                   int parity = 0);

// Plain white-noise field (every blade coefficient iid normal).
MultivectorField random_field(const GridSpec& grid, Rng& rng);

// f2(x) = f(x - shift . spacing), exact circular shift of the samples.
MultivectorField translate_samples(const MultivectorField& f,
                                   const std::array<int, 3>& shift_cells);

// f2(x) = f(r0 x) for a rotation mapping the grid onto itself.
MultivectorField rotate_argument(const MultivectorField& f, const Rotation& r0);

// ----- check primitives; each returns a relative error (smaller is better).

double plancherel_max_error(const GridSpec& grid, int field_count,
                            std::uint64_t seed);

// n=2: max cross-parity spectral magnitude for a random mixed field.
double parity_preservation_leakage(const GridSpec& grid, std::uint64_t seed);

double direct_vs_spectral_error(const MotherWavelet& psi,
                                const MultivectorField& f,
                                const GroupGrid& grid);

double covariance_translation_error(const MotherWavelet& psi,
                                    const MultivectorField& f,
                                    const GroupGrid& grid,
                                    const std::array<int, 3>& shift_cells);

double covariance_rotation_error(const MotherWavelet& psi,
                                 const MultivectorField& f,
                                 const GroupGrid& grid, const Rotation& r0);

// Both f(c x) and f must be representable on the grid, so f is given in
// closed form; scale_step nodes apart must satisfy a_{j+step} = c a_j.
double covariance_dilation_error(const MotherWavelet& psi,
                                 const std::function<Multivector(const Vec&)>& f,
                                 const GroupGrid& grid, double c, int scale_step);

// Max |  ||psi_g|| - ||psi||  | / ||psi|| over the given group points.
double daughter_norm_error(const MotherWavelet& psi,
                           const std::vector<GroupPoint>& points,
                           const GridSpec& grid);

// Max spectral-representation mismatch over the given group points; needs a
// closed-form mother spectrum.
double daughter_spectral_error(const MotherWavelet& psi,
                               const std::vector<GroupPoint>& points,
                               const GridSpec& grid);

double inner_product_relation_error(const MotherWavelet& psi,
                                    const AdmissibilityConstant& constant,
                                    const MultivectorField& f,
                                    const MultivectorField& g,
                                    const GroupGrid& grid);

double norm_relation_error(const MotherWavelet& psi,
                           const AdmissibilityConstant& constant,
                           const MultivectorField& f, const GroupGrid& grid);

double inversion_error(const MotherWavelet& psi,
                       const AdmissibilityConstant& constant,
                       const MultivectorField& f, const GroupGrid& grid);

// Reproduces coefficients at `probe_count` informative nodes through the
// kernel integral (evaluated as analysis of the synthesis, which it equals
// identically) and returns the worst per-probe relative error.
double reproducing_kernel_error(const MotherWavelet& psi,
                                const AdmissibilityConstant& constant,
                                const MultivectorField& f,
                                const GroupGrid& grid, int probe_count,
                                std::uint64_t seed);

struct UncertaintyReport {
  double position_term = 0.0;   // || b T_psi f ||^2 over the group grid
  double frequency_term = 0.0;  // C * (w f^, w f^), or ||w f^||^2 (scalar form)
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs; >= 1 when the inequality holds
  bool degenerate = false;
};

// Theorem-form inequality with a general (grade {0,1}) constant.
UncertaintyReport check_uncertainty_general(const MotherWavelet& psi,
                                            const AdmissibilityConstant& constant,
                                            const MultivectorField& f,
                                            const GroupGrid& grid);

// Corollary form; requires the grade-1 part of C below 1e-8 |C|.
UncertaintyReport check_uncertainty_scalar(const MotherWavelet& psi,
                                           const AdmissibilityConstant& constant,
                                           const MultivectorField& f,
                                           const GroupGrid& grid);

// Integral over (a,theta) of ||w F{T(a,theta,.)}||^2 dmu: the coefficient
// frequency variance, which is independent of the wavelet parity.
double integrated_frequency_variance(const WaveletCoefficients& coeffs);

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct Report {
  std::vector<std::string> header;
  std::vector<CheckResult> checks;

  void add(const std::string& name, double measured, double tolerance,
           const std::string& note = "");
  bool all_pass() const;
  // One check per line: name, measured, tolerance, PASS/FAIL.
  void write(std::ostream& out) const;
};

struct SuiteConfig {
  int n = 2;
  int grid_samples = 64;     // per axis
  double extent = 16.0;      // box [-extent/2, extent/2)
  double a_min = 0.5;
  double a_max = 4.0;
  int scale_count = 16;
  int rotation_count = 16;
  Vec sigma{1.0, 1.0, 1.0};
  Vec omega0{5.0, 0.0, 0.0};
  // Spectral annulus for the random band signals.
  double band_lo = 2.5;
  double band_hi = 4.2;
  std::uint64_t seed = 20240601;
  int uncertainty_signals = 20;
  // Pinned instances independent of the profile above.
  int inversion_scales = 32;
  int inversion_rotations = 32;
};

Report run_identity_suite(const SuiteConfig& config);

}  // namespace clw
