#include "fft_backend.hpp"

#include <fftw3.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>

namespace clw::fft {

namespace {

std::mutex plan_mutex;

fftw_plan plan_for(const std::vector<int>& shape, int sign) {
  static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  const auto key = std::make_pair(shape, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::size_t total = 1;
  for (int s : shape) total *= static_cast<std::size_t>(s);
  // Scratch only for planning; FFTW_UNALIGNED lets the plan run on any
  // caller buffer afterwards.
  std::vector<std::complex<double>> scratch(total);
  fftw_plan plan = fftw_plan_dft(
      static_cast<int>(shape.size()), shape.data(),
      reinterpret_cast<fftw_complex*>(scratch.data()),
      reinterpret_cast<fftw_complex*>(scratch.data()),
      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(key, plan);
  return plan;
}

}  // namespace

void transform(std::vector<std::complex<double>>& data,
               const std::vector<int>& shape, int sign) {
  std::size_t total = 1;
  for (int s : shape) total *= static_cast<std::size_t>(s);
  if (data.size() != total) {
    throw std::runtime_error("fft buffer size does not match shape");
  }
  fftw_plan plan = plan_for(shape, sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data.data()),
                   reinterpret_cast<fftw_complex*>(data.data()));
}

}  // namespace clw::fft
