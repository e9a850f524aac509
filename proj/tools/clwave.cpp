// clwave: command-line surface for the Clifford wavelet library.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clw/clwf_io.hpp"
#include "clw/parallel.hpp"
#include "clw/verify.hpp"
#include "clw/wavelet.hpp"

namespace {

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

clw::Vec to_vec(const std::vector<double>& values, int n, const char* what) {
  if (static_cast<int>(values.size()) != n) {
    throw clw::Error(std::string(what) + " needs exactly " + std::to_string(n) +
                     " comma-separated components");
  }
  clw::Vec v{};
  for (int k = 0; k < n; ++k) v[k] = values[k];
  return v;
}

// Wavelet argument: either a CLWF file path or a builtin such as
//   gabor:n=2;sigma=1,1;omega0=3,0;amp=1
clw::MotherWavelet load_wavelet(const std::string& spec, const clw::GridSpec& grid) {
  if (spec.rfind("gabor:", 0) != 0) {
    const clw::MultivectorField field = clw::read_field(spec);
    clw::check_same_grid(field.grid(), grid);
    return clw::MotherWavelet::from_field(field);
  }
  std::string sigma_text = "1";
  std::string omega_text;
  std::string amp_text = "1";
  std::stringstream stream(spec.substr(6));
  std::string item;
  while (std::getline(stream, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw clw::Error("gabor parameter '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "sigma") {
      sigma_text = value;
    } else if (key == "omega0") {
      omega_text = value;
    } else if (key == "amp") {
      amp_text = value;
    } else if (key == "n") {
      if (std::stoi(value) != grid.n) {
        throw clw::Error("gabor n=" + value + " does not match the grid");
      }
    } else {
      throw clw::Error("unknown gabor parameter '" + key + "'");
    }
  }
  if (omega_text.empty()) throw clw::Error("gabor needs omega0=...");
  auto sigma_values = parse_reals(sigma_text);
  if (sigma_values.size() == 1) sigma_values.resize(grid.n, sigma_values[0]);
  return clw::MotherWavelet::gabor(grid, to_vec(sigma_values, grid.n, "sigma"),
                                   to_vec(parse_reals(omega_text), grid.n, "omega0"),
                                   clw::parse_multivector(grid.n, amp_text));
}

int cmd_gabor(int n, const std::string& sigma_text, const std::string& omega_text,
              const std::string& amp_text, int samples, double extent,
              const std::string& out_path) {
  const clw::GridSpec grid = clw::GridSpec::centered_cube(n, extent, samples);
  auto sigma_values = parse_reals(sigma_text);
  if (sigma_values.size() == 1) sigma_values.resize(n, sigma_values[0]);
  const clw::Vec sigma = to_vec(sigma_values, n, "sigma");
  const clw::Vec omega0 = to_vec(parse_reals(omega_text), n, "omega0");
  double omega_mag = 0.0;
  for (int k = 0; k < n; ++k) omega_mag += omega0[k] * omega0[k];
  if (omega_mag == 0.0) {
    std::cerr << "warning: omega0 = 0 produces the zero function, which is "
                 "not admissible\n";
  }
  const clw::MotherWavelet psi = clw::MotherWavelet::gabor(
      grid, sigma, omega0, clw::parse_multivector(n, amp_text));
  clw::write_field(out_path, psi.field());

  // Component means, the zero-mean admissibility condition.
  const double cell_volume = grid.cell_volume();
  const double tau =
      1e-8 * clw::norm(psi.field()) * std::sqrt(grid.volume());
  bool zero_mean = true;
  std::cout << "wrote " << out_path << " (n=" << n << ", parity "
            << (psi.parity() > 0 ? "+1" : "-1") << ")\n";
  for (int b = 0; b < psi.field().blades(); ++b) {
    double mean = 0.0;
    const double* plane = psi.field().plane(b);
    for (std::size_t c = 0; c < psi.field().cells(); ++c) mean += plane[c];
    mean *= cell_volume;
    zero_mean = zero_mean && std::abs(mean) <= tau;
    std::printf("mean[%s] = % .3e\n", clw::blade_name(n, b).c_str(), mean);
  }
  std::cout << "zero-mean condition: " << (zero_mean ? "satisfied" : "VIOLATED")
            << " (tolerance " << tau << ")\n";
  return 0;
}

int cmd_admissibility(const std::string& wavelet_spec, int n, int samples,
                      double extent) {
  clw::GridSpec grid;
  if (wavelet_spec.rfind("gabor:", 0) == 0) {
    grid = clw::GridSpec::centered_cube(n, extent, samples);
  } else {
    grid = clw::read_field(wavelet_spec).grid();
  }
  const clw::MotherWavelet psi = load_wavelet(wavelet_spec, grid);
  std::cout << "parity epsilon = " << (psi.parity() > 0 ? "+1" : "-1") << "\n";
  try {
    const clw::AdmissibilityConstant constant = clw::admissibility(psi);
    std::cout << "admissible: yes\n";
    std::cout << "C_psi      = " << clw::to_string(constant.value) << "\n";
    std::cout << "C_psi^-1   = " << clw::to_string(constant.inverse) << "\n";
    std::cout << "C'_psi     = " << clw::to_string(constant.c_prime) << "\n";
    std::cout << "C'_psi^-1  = " << clw::to_string(constant.c_prime_inverse)
              << "\n";
    std::cout << "invertible: yes\n";
    return 0;
  } catch (const clw::NotAdmissible& e) {
    std::cout << "admissible: no (" << e.what() << ")\n";
    return 1;
  }
}

int cmd_transform(const std::string& wavelet_spec, const std::string& signal_path,
                  double a_min, double a_max, int scales, int rotations,
                  const std::string& sampling_name, const std::string& method,
                  const std::string& out_path) {
  const clw::MultivectorField f = clw::read_field(signal_path);
  const clw::MotherWavelet psi = load_wavelet(wavelet_spec, f.grid());
  const clw::RotationSampling sampling =
      sampling_name == "octahedral" ? clw::RotationSampling::kOctahedral
                                    : clw::RotationSampling::kUniform;
  const clw::GroupGrid grid =
      clw::build_group_grid(a_min, a_max, scales, rotations, f.grid(), sampling);
  const clw::WaveletCoefficients coeffs =
      method == "direct" ? clw::transform_direct(psi, f, grid)
                         : clw::transform_spectral(psi, f, grid);
  clw::write_coefficients(out_path, coeffs, psi.parity());
  std::cout << "wrote " << out_path << " (" << grid.scale_count() << " scales x "
            << grid.rotation_count() << " rotations x " << coeffs.cells()
            << " translations)\n";
  return 0;
}

int cmd_invert(const std::string& coeffs_path, const std::string& wavelet_spec,
               const std::string& out_path, const std::string& reference_path) {
  const clw::CoefficientsFile file = clw::read_coefficients(coeffs_path);
  const clw::GridSpec& grid = file.coefficients.grid().translations;
  const clw::MotherWavelet psi = load_wavelet(wavelet_spec, grid);
  if (psi.parity() != file.parity) {
    throw clw::Error("wavelet parity does not match the coefficients file");
  }
  const clw::AdmissibilityConstant constant = clw::admissibility(psi);
  const clw::MultivectorField rec =
      clw::inverse_transform(file.coefficients, psi, constant);
  clw::write_field(out_path, rec);
  std::cout << "wrote " << out_path << "\n";
  if (!reference_path.empty()) {
    const clw::MultivectorField reference = clw::read_field(reference_path);
    const double err = clw::norm(rec - reference) / clw::norm(reference);
    std::cout << "relative reconstruction error = " << err << "\n";
  }
  return 0;
}

int cmd_verify(int n, int samples, double extent, double a_min, double a_max,
               int scales, int rotations, std::uint64_t seed, int signals,
               const std::string& report_path) {
  clw::SuiteConfig config;
  config.n = n;
  config.grid_samples = samples;
  config.extent = extent;
  config.a_min = a_min;
  config.a_max = a_max;
  config.scale_count = scales;
  config.rotation_count = rotations;
  config.seed = seed;
  config.uncertainty_signals = signals;
  if (n == 3) {
    // Desk-scale n=3 defaults: coarser grid, carrier within band.
    config.grid_samples = std::min(samples, 32);
    config.omega0 = clw::Vec{2.2, 0.0, 0.0};
    config.band_lo = 1.2;
    config.band_hi = 2.0;
    config.inversion_scales = 16;
    config.uncertainty_signals = std::min(signals, 6);
  }
  const clw::Report report = clw::run_identity_suite(config);
  report.write(std::cout);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::trunc);
    if (!out) throw clw::IoError("cannot open '" + report_path + "'");
    report.write(out);
    std::cout << "wrote " << report_path << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_export_plot(const std::string& coeffs_path, const std::string& out_path) {
  const clw::CoefficientsFile file = clw::read_coefficients(coeffs_path);
  const clw::WaveletCoefficients& coeffs = file.coefficients;
  const clw::GroupGrid& grid = coeffs.grid();
  const int n = grid.translations.n;
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw clw::IoError("cannot open '" + out_path + "'");
  if (n == 2) {
    out << "a\ttheta\tb1\tb2\tmodulus\n";
  } else {
    out << "a\tqw\tqx\tqy\tqz\tb1\tb2\tb3\tmodulus\n";
  }
  for (std::size_t j = 0; j < grid.scale_count(); ++j) {
    for (std::size_t k = 0; k < grid.rotation_count(); ++k) {
      for (std::size_t c = 0; c < coeffs.cells(); ++c) {
        const clw::Vec b = grid.translations.point(c);
        out << grid.scales[j] << '\t';
        if (n == 2) {
          out << grid.rotations[k].angle() << '\t' << b[0] << '\t' << b[1];
        } else {
          const auto& q = grid.rotations[k].quaternion();
          out << q[0] << '\t' << q[1] << '\t' << q[2] << '\t' << q[3] << '\t'
              << b[0] << '\t' << b[1] << '\t' << b[2];
        }
        out << '\t' << clw::modulus(coeffs.at(j, k, c)) << '\n';
      }
    }
  }
  std::cout << "wrote " << out_path << " (" << grid.node_count() << " nodes)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra Cl(n,0) continuous wavelet transform toolkit"};
  app.set_config("--config", "", "Read defaults from a key=value file");
  int threads = 1;
  app.add_option("--threads", threads, "Worker thread cap")->capture_default_str();

  // gabor
  auto* gabor = app.add_subcommand("gabor", "Sample a Gabor mother wavelet");
  int g_n = 2, g_samples = 64;
  double g_extent = 16.0;
  std::string g_sigma = "1,1", g_omega = "3,0", g_amp = "1", g_out = "psi.clwf";
  gabor->add_option("--n", g_n, "Algebra dimension (2 or 3)")->capture_default_str();
  gabor->add_option("--sigma", g_sigma, "Envelope widths, comma separated")
      ->capture_default_str();
  gabor->add_option("--omega0", g_omega, "Carrier frequency vector")
      ->capture_default_str();
  gabor->add_option("--amp", g_amp, "Amplitude multivector, e.g. 1 or e1:1")
      ->capture_default_str();
  gabor->add_option("--grid", g_samples, "Samples per axis")->capture_default_str();
  gabor->add_option("--extent", g_extent, "Box side length")->capture_default_str();
  gabor->add_option("--out", g_out, "Output CLWF file")->capture_default_str();

  // admissibility
  auto* adm = app.add_subcommand("admissibility",
                                 "Compute and report the admissibility constant");
  std::string a_wavelet;
  int a_n = 2, a_samples = 64;
  double a_extent = 16.0;
  adm->add_option("--wavelet", a_wavelet, "CLWF file or gabor:... builtin")
      ->required();
  adm->add_option("--n", a_n, "Dimension for builtin wavelets")->capture_default_str();
  adm->add_option("--grid", a_samples, "Samples per axis for builtin wavelets")
      ->capture_default_str();
  adm->add_option("--extent", a_extent, "Box side length for builtin wavelets")
      ->capture_default_str();

  // transform
  auto* tf = app.add_subcommand("transform", "Analyze a signal");
  std::string t_wavelet, t_signal, t_out = "coeffs.clwc";
  std::string t_sampling = "uniform", t_method = "spectral";
  double t_amin = 0.5, t_amax = 4.0;
  int t_scales = 16, t_rotations = 16;
  tf->add_option("--wavelet", t_wavelet, "CLWF file or gabor:... builtin")
      ->required();
  tf->add_option("--signal", t_signal, "Input CLWF field")->required();
  tf->add_option("--amin", t_amin, "Smallest scale")->capture_default_str();
  tf->add_option("--amax", t_amax, "Largest scale")->capture_default_str();
  tf->add_option("--scales", t_scales, "Scale node count")->capture_default_str();
  tf->add_option("--rotations", t_rotations, "Rotation node count")
      ->capture_default_str();
  tf->add_option("--sampling", t_sampling, "Rotation sampling: uniform|octahedral")
      ->capture_default_str();
  tf->add_option("--method", t_method, "spectral (FFT) or direct (reference)")
      ->capture_default_str();
  tf->add_option("--out", t_out, "Output CLWC file")->capture_default_str();

  // invert
  auto* inv = app.add_subcommand("invert", "Reconstruct a signal from coefficients");
  std::string i_coeffs, i_wavelet, i_out = "reconstruction.clwf", i_signal;
  inv->add_option("--coeffs", i_coeffs, "Input CLWC file")->required();
  inv->add_option("--wavelet", i_wavelet, "CLWF file or gabor:... builtin")
      ->required();
  inv->add_option("--out", i_out, "Output CLWF file")->capture_default_str();
  inv->add_option("--signal", i_signal,
                  "Original signal; prints the relative reconstruction error");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the identity suite");
  int v_n = 2, v_samples = 64, v_scales = 16, v_rotations = 16, v_signals = 20;
  double v_extent = 16.0, v_amin = 0.5, v_amax = 4.0;
  std::uint64_t v_seed = 20240601;
  std::string v_report;
  ver->add_option("--n", v_n, "Algebra dimension (2 or 3)")->capture_default_str();
  ver->add_option("--grid", v_samples, "Samples per axis")->capture_default_str();
  ver->add_option("--extent", v_extent, "Box side length")->capture_default_str();
  ver->add_option("--amin", v_amin, "Smallest scale")->capture_default_str();
  ver->add_option("--amax", v_amax, "Largest scale")->capture_default_str();
  ver->add_option("--scales", v_scales, "Scale node count")->capture_default_str();
  ver->add_option("--rotations", v_rotations, "Rotation node count")
      ->capture_default_str();
  ver->add_option("--seed", v_seed, "Random suite seed")->capture_default_str();
  ver->add_option("--signals", v_signals, "Uncertainty suite size")
      ->capture_default_str();
  ver->add_option("--report", v_report, "Write the report to this file");

  // export-plot
  auto* plot = app.add_subcommand("export-plot",
                                  "Dump group-node coordinates and moduli");
  std::string p_coeffs, p_out = "coefficients.txt";
  plot->add_option("--coeffs", p_coeffs, "Input CLWC file")->required();
  plot->add_option("--out", p_out, "Output delimited text file")
      ->capture_default_str();

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  clw::set_thread_count(threads);
  try {
    if (gabor->parsed()) {
      return cmd_gabor(g_n, g_sigma, g_omega, g_amp, g_samples, g_extent, g_out);
    }
    if (adm->parsed()) {
      return cmd_admissibility(a_wavelet, a_n, a_samples, a_extent);
    }
    if (tf->parsed()) {
      return cmd_transform(t_wavelet, t_signal, t_amin, t_amax, t_scales,
                           t_rotations, t_sampling, t_method, t_out);
    }
    if (inv->parsed()) {
      return cmd_invert(i_coeffs, i_wavelet, i_out, i_signal);
    }
    if (ver->parsed()) {
      return cmd_verify(v_n, v_samples, v_extent, v_amin, v_amax, v_scales,
                        v_rotations, v_seed, v_signals, v_report);
    }
    if (plot->parsed()) {
      return cmd_export_plot(p_coeffs, p_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
