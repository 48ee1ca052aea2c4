#ifndef EVOCONV_FFT_HPP
#define EVOCONV_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace evc {

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n);

// Real FFT, power-of-two sizes only. Input shorter than nfft is zero-padded.
// rfft returns nfft/2+1 bins; irfft applies the 1/nfft scale so the pair is
// an identity. Plans are cached per size; calls are serialized internally.
std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t nfft);
std::vector<double> irfft(std::span<const std::complex<double>> spec, std::size_t nfft);

}  // namespace evc

#endif
