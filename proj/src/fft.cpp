#include "evoconv/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

#include "evoconv/errors.hpp"

namespace evc {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  std::size_t n = 0;

  explicit PlanPair(std::size_t nfft) : n(nfft) {
    real = fftw_alloc_real(nfft);
    cplx = fftw_alloc_complex(nfft / 2 + 1);
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(nfft), real, cplx, FFTW_ESTIMATE);
    inv = fftw_plan_dft_c2r_1d(static_cast<int>(nfft), cplx, real, FFTW_ESTIMATE);
  }
  PlanPair(const PlanPair&) = delete;
  ~PlanPair() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
    fftw_free(real);
    fftw_free(cplx);
  }
};

std::mutex g_mutex;
std::map<std::size_t, std::unique_ptr<PlanPair>>& plan_cache() {
  static std::map<std::size_t, std::unique_ptr<PlanPair>> cache;
  return cache;
}

PlanPair& plan_for(std::size_t nfft) {
  auto& cache = plan_cache();
  auto it = cache.find(nfft);
  if (it == cache.end()) it = cache.emplace(nfft, std::make_unique<PlanPair>(nfft)).first;
  return *it->second;
}

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t nfft) {
  if (!is_pow2(nfft)) throw ValidationError("fft size must be a power of two");
  if (x.size() > nfft) throw ValidationError("fft input longer than transform size");
  std::lock_guard<std::mutex> lock(g_mutex);
  PlanPair& p = plan_for(nfft);
  std::memcpy(p.real, x.data(), x.size() * sizeof(double));
  std::memset(p.real + x.size(), 0, (nfft - x.size()) * sizeof(double));
  fftw_execute(p.fwd);
  std::vector<std::complex<double>> out(nfft / 2 + 1);
  std::memcpy(out.data(), p.cplx, out.size() * sizeof(fftw_complex));
  return out;
}

std::vector<double> irfft(std::span<const std::complex<double>> spec, std::size_t nfft) {
  if (!is_pow2(nfft)) throw ValidationError("fft size must be a power of two");
  if (spec.size() != nfft / 2 + 1) throw ValidationError("bad spectrum length for irfft");
  std::lock_guard<std::mutex> lock(g_mutex);
  PlanPair& p = plan_for(nfft);
  std::memcpy(p.cplx, spec.data(), spec.size() * sizeof(fftw_complex));
  fftw_execute(p.inv);
  std::vector<double> out(nfft);
  const double scale = 1.0 / static_cast<double>(nfft);
  for (std::size_t i = 0; i < nfft; ++i) out[i] = p.real[i] * scale;
  return out;
}

}  // namespace evc
