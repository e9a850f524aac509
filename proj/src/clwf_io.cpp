#include "clw/clwf_io.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace clw {

namespace {

constexpr std::uint32_t kVersion = 1;

// CRC-64/XZ (reflected), table-driven.
const std::array<std::uint64_t, 256>& crc64_table() {
  static const auto table = [] {
    std::array<std::uint64_t, 256> t{};
    const std::uint64_t poly = 0xC96C5795D7870F42ull;
    for (std::uint64_t i = 0; i < 256; ++i) {
      std::uint64_t crc = i;
      for (int bit = 0; bit < 8; ++bit) {
        crc = (crc & 1) ? (crc >> 1) ^ poly : crc >> 1;
      }
      t[i] = crc;
    }
    return t;
  }();
  return table;
}

std::uint64_t crc64(const std::uint8_t* data, std::size_t size) {
  std::uint64_t crc = ~0ull;
  for (std::size_t i = 0; i < size; ++i) {
    crc = crc64_table()[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
  }
  return ~crc;
}

class Writer {
 public:
  void bytes(const void* src, std::size_t size) {
    const auto* p = static_cast<const std::uint8_t*>(src);
    buffer_.insert(buffer_.end(), p, p + size);
  }
  void u8(std::uint8_t v) { bytes(&v, 1); }
  void u16(std::uint16_t v) { le(v); }
  void u32(std::uint32_t v) { le(v); }
  void u64(std::uint64_t v) { le(v); }
  void f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    le(bits);
  }
  void f64_array(const double* p, std::size_t count) {
    // Little-endian host: bulk copy; the per-value path stays correct
    // elsewhere regardless.
    bytes(p, count * sizeof(double));
  }
  const std::vector<std::uint8_t>& data() const { return buffer_; }

  void commit(const std::string& path) {
    const std::uint64_t checksum = crc64(buffer_.data(), buffer_.size());
    u64(checksum);
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot open '" + tmp + "' for writing");
      out.write(reinterpret_cast<const char*>(buffer_.data()),
                static_cast<std::streamsize>(buffer_.size()));
      if (!out) throw IoError("short write to '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::filesystem::remove(tmp);
      throw IoError("cannot move '" + tmp + "' to '" + path + "'");
    }
  }

 private:
  template <typename T>
  void le(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }
  std::vector<std::uint8_t> buffer_;
};

class Reader {
 public:
  explicit Reader(const std::string& path) : path_(path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    buffer_.assign(std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>());
    if (buffer_.size() < 12) throw IoError("'" + path + "' is truncated");
    const std::size_t body = buffer_.size() - 8;
    std::uint64_t stored = 0;
    for (int i = 7; i >= 0; --i) {
      stored = (stored << 8) | static_cast<std::uint8_t>(buffer_[body + i]);
    }
    const std::uint64_t actual =
        crc64(reinterpret_cast<const std::uint8_t*>(buffer_.data()), body);
    if (stored != actual) throw IoError("'" + path + "' fails its checksum");
    end_ = body;
  }

  void bytes(void* dst, std::size_t size) {
    if (pos_ + size > end_) throw IoError("'" + path_ + "' is truncated");
    std::memcpy(dst, buffer_.data() + pos_, size);
    pos_ += size;
  }
  std::uint8_t u8() {
    std::uint8_t v;
    bytes(&v, 1);
    return v;
  }
  std::uint16_t u16() { return le<std::uint16_t>(); }
  std::uint32_t u32() { return le<std::uint32_t>(); }
  std::uint64_t u64() { return le<std::uint64_t>(); }
  double f64() {
    const std::uint64_t bits = le<std::uint64_t>();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  void f64_array(double* p, std::size_t count) {
    bytes(p, count * sizeof(double));
  }

 private:
  template <typename T>
  T le() {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<T>(u8()) << (8 * i);
    }
    return v;
  }
  std::string path_;
  std::vector<char> buffer_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

void write_grid(Writer& w, const GridSpec& grid) {
  for (int k = 0; k < grid.n; ++k) {
    w.f64(grid.x_min[k]);
    w.f64(grid.x_max[k]);
    w.u64(static_cast<std::uint64_t>(grid.samples[k]));
  }
}

GridSpec read_grid(Reader& r, int n) {
  GridSpec grid;
  grid.n = n;
  for (int k = 0; k < n; ++k) {
    grid.x_min[k] = r.f64();
    grid.x_max[k] = r.f64();
    grid.samples[k] = static_cast<int>(r.u64());
  }
  grid.validate();
  return grid;
}

void write_field_header(Writer& w, FieldDomain domain, const GridSpec& grid) {
  w.bytes("CLWF", 4);
  w.u32(kVersion);
  w.u8(static_cast<std::uint8_t>(domain));
  w.u8(static_cast<std::uint8_t>(grid.n));
  w.u16(0);
  w.u64(blade_order_digest(grid.n));
  write_grid(w, grid);
}

struct FieldHeader {
  FieldDomain domain;
  GridSpec grid;
};

FieldHeader read_field_header(Reader& r, const std::string& path) {
  char magic[4];
  r.bytes(magic, 4);
  if (std::memcmp(magic, "CLWF", 4) != 0) {
    throw IoError("'" + path + "' is not a CLWF file");
  }
  const std::uint32_t version = r.u32();
  if (version != kVersion) {
    throw IoError("'" + path + "' has unsupported version " +
                  std::to_string(version));
  }
  const std::uint8_t domain = r.u8();
  if (domain > 1) throw IoError("'" + path + "' has an unknown domain flag");
  const int n = r.u8();
  check_dimension(n);
  r.u16();
  if (r.u64() != blade_order_digest(n)) {
    throw IoError("'" + path + "' was written with a different blade order");
  }
  return {static_cast<FieldDomain>(domain), read_grid(r, n)};
}

}  // namespace

std::uint64_t blade_order_digest(int n) {
  check_dimension(n);
  std::string names;
  for (int i = 0; i < blade_count(n); ++i) {
    names += blade_name(n, i);
    names += ',';
  }
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : names) {
    hash ^= static_cast<std::uint8_t>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

void write_field(const std::string& path, const MultivectorField& field) {
  Writer w;
  write_field_header(w, FieldDomain::kSpatial, field.grid());
  w.f64_array(field.raw().data(), field.raw().size());
  w.commit(path);
}

void write_spectrum(const std::string& path, const SpectrumField& spectrum) {
  Writer w;
  write_field_header(w, FieldDomain::kSpectral, spectrum.spatial_grid());
  w.f64_array(spectrum.raw().data(), spectrum.raw().size());
  w.commit(path);
}

FieldDomain peek_domain(const std::string& path) {
  Reader r(path);
  return read_field_header(r, path).domain;
}

MultivectorField read_field(const std::string& path) {
  Reader r(path);
  const FieldHeader header = read_field_header(r, path);
  if (header.domain != FieldDomain::kSpatial) {
    throw IoError("'" + path + "' holds a spectrum, not a spatial field");
  }
  MultivectorField field(header.grid);
  r.f64_array(field.raw().data(), field.raw().size());
  return field;
}

SpectrumField read_spectrum(const std::string& path) {
  Reader r(path);
  const FieldHeader header = read_field_header(r, path);
  if (header.domain != FieldDomain::kSpectral) {
    throw IoError("'" + path + "' holds a spatial field, not a spectrum");
  }
  SpectrumField spectrum(header.grid);
  r.f64_array(spectrum.raw().data(), spectrum.raw().size());
  return spectrum;
}

void write_coefficients(const std::string& path,
                        const WaveletCoefficients& coeffs, int parity) {
  const GroupGrid& grid = coeffs.grid();
  Writer w;
  w.bytes("CLWC", 4);
  w.u32(kVersion);
  w.u8(static_cast<std::uint8_t>(grid.translations.n));
  w.u8(parity < 0 ? 1 : 0);
  w.u8(grid.sampling == RotationSampling::kOctahedral ? 1 : 0);
  w.u8(0);
  w.u64(blade_order_digest(grid.translations.n));
  w.f64(grid.a_min);
  w.f64(grid.a_max);
  w.u32(static_cast<std::uint32_t>(grid.scale_count()));
  w.u32(static_cast<std::uint32_t>(grid.rotation_count()));
  write_grid(w, grid.translations);
  w.f64_array(coeffs.raw().data(), coeffs.raw().size());
  w.commit(path);

  std::ostringstream meta;
  meta << "format = clwc v" << kVersion << "\n";
  meta << "n = " << grid.translations.n << "\n";
  meta << "parity = " << parity << "\n";
  meta << "scales = " << grid.scale_count() << " log-uniform in [" << grid.a_min
       << ", " << grid.a_max << "]\n";
  meta << "rotations = " << grid.rotation_count() << " "
       << (grid.sampling == RotationSampling::kOctahedral ? "octahedral"
                                                          : "uniform")
       << " (weights sum to 1)\n";
  for (int k = 0; k < grid.translations.n; ++k) {
    meta << "axis" << k << " = [" << grid.translations.x_min[k] << ", "
         << grid.translations.x_max[k] << ") x "
         << grid.translations.samples[k] << "\n";
  }
  const std::string meta_path = path + ".meta";
  const std::string tmp = meta_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out << meta.str();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, meta_path, ec);
  if (ec) throw IoError("cannot move '" + tmp + "' to '" + meta_path + "'");
}

CoefficientsFile read_coefficients(const std::string& path) {
  Reader r(path);
  char magic[4];
  r.bytes(magic, 4);
  if (std::memcmp(magic, "CLWC", 4) != 0) {
    throw IoError("'" + path + "' is not a CLWC file");
  }
  const std::uint32_t version = r.u32();
  if (version != kVersion) {
    throw IoError("'" + path + "' has unsupported version " +
                  std::to_string(version));
  }
  const int n = r.u8();
  check_dimension(n);
  const int parity = r.u8() ? -1 : 1;
  const RotationSampling sampling =
      r.u8() ? RotationSampling::kOctahedral : RotationSampling::kUniform;
  r.u8();
  if (r.u64() != blade_order_digest(n)) {
    throw IoError("'" + path + "' was written with a different blade order");
  }
  const double a_min = r.f64();
  const double a_max = r.f64();
  const int scale_count = static_cast<int>(r.u32());
  const int rotation_count = static_cast<int>(r.u32());
  const GridSpec grid = read_grid(r, n);
  CoefficientsFile out;
  out.parity = parity;
  out.coefficients = WaveletCoefficients(
      build_group_grid(a_min, a_max, scale_count, rotation_count, grid, sampling));
  if (out.coefficients.grid().rotation_count() !=
      static_cast<std::size_t>(rotation_count)) {
    throw IoError("'" + path + "' rotation count mismatch on rebuild");
  }
  r.f64_array(out.coefficients.raw().data(), out.coefficients.raw().size());
  return out;
}

}  // namespace clw
