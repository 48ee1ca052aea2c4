#ifndef EVOCONV_WAVE_HPP
#define EVOCONV_WAVE_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace evc {

// Mono time-domain audio, samples in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = 16000;

  // Enforces the type invariants: finite samples, |s| <= 1 + 1e-6, rate >= 8000.
  void validate() const;
  double duration_s() const {
    return sample_rate_hz > 0 ? static_cast<double>(samples.size()) / sample_rate_hz : 0.0;
  }
};

enum class Window { hann, rect };

// Windowed analysis frames, stored row-major T x W.
struct FrameSequence {
  std::vector<double> data;
  std::size_t frame_len = 0;
  std::size_t hop = 0;
  int sample_rate_hz = 0;

  std::size_t frames() const { return frame_len ? data.size() / frame_len : 0; }
  std::span<const double> frame(std::size_t t) const {
    return {data.data() + t * frame_len, frame_len};
  }
  std::span<double> frame(std::size_t t) { return {data.data() + t * frame_len, frame_len}; }
};

// T = floor((N - W) / hop) + 1 for N >= W.
std::size_t frame_count(std::size_t n, std::size_t w, std::size_t hop);

// PCM16 or float32 RIFF/WAVE, mono only. Samples map to [-1, 1].
Waveform read_wav(const std::filesystem::path& path);

// Always writes mono PCM16; samples are clipped then rounded to nearest.
void write_wav(const std::filesystem::path& path, const Waveform& wave);

FrameSequence frame_signal(const Waveform& wave, double frame_ms, double hop_ms,
                           Window window = Window::hann);

}  // namespace evc

#endif
