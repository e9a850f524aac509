// Binary containers for sampled fields and wavelet coefficients.
//
// CLWF (fields): magic "CLWF", version, domain flag (spatial|spectral),
// n, blade-order digest, per-axis GridSpec, then the coefficient planes in
// blade-major, row-major grid order as little-endian f64, and a CRC-64
// trailer over everything before it.
//
// CLWC (coefficients): magic "CLWC", same digest and grid block plus the
// group-grid construction parameters; the GroupGrid is rebuilt
// deterministically on load. A small text sidecar `<path>.meta` describes
// the group grid for human consumption.
//
// Writers stage into a temporary file and rename, so a failed write never
// leaves a partial output behind.

#pragma once

#include <cstdint>
#include <string>

#include "clw/cft.hpp"
#include "clw/field.hpp"
#include "clw/simgroup.hpp"

namespace clw {

enum class FieldDomain : std::uint8_t { kSpatial = 0, kSpectral = 1 };

// FNV-1a of the canonical blade-name list; readers refuse files written
// under a different blade order.
std::uint64_t blade_order_digest(int n);

void write_field(const std::string& path, const MultivectorField& field);
void write_spectrum(const std::string& path, const SpectrumField& spectrum);

FieldDomain peek_domain(const std::string& path);
MultivectorField read_field(const std::string& path);
SpectrumField read_spectrum(const std::string& path);

struct CoefficientsFile {
  WaveletCoefficients coefficients;
  int parity = 1;
};

void write_coefficients(const std::string& path, const WaveletCoefficients& coeffs,
                        int parity);
CoefficientsFile read_coefficients(const std::string& path);

}  // namespace clw
