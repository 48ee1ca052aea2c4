// WAV I/O and framing. The reader accepts the two encodings we produce or
// import (PCM16, float32), mono only; everything else is rejected with a
// distinct error so batch ingestion can report exactly what went wrong.
#include "evoconv/wave.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "evoconv/errors.hpp"

namespace evc {

void Waveform::validate() const {
  if (sample_rate_hz < 8000) throw ValidationError("sample rate below 8000 Hz");
  for (double s : samples) {
    if (!std::isfinite(s)) throw ValidationError("non-finite sample");
    if (std::fabs(s) > 1.0 + 1e-6) throw ValidationError("sample outside [-1, 1]");
  }
}

std::size_t frame_count(std::size_t n, std::size_t w, std::size_t hop) {
  if (n < w || hop == 0) return 0;
  return (n - w) / hop + 1;
}

namespace {

std::uint32_t rd_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t rd_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void wr_u32(std::ofstream& f, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  f.write(reinterpret_cast<const char*>(b), 4);
}
void wr_u16(std::ofstream& f, std::uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8)};
  f.write(reinterpret_cast<const char*>(b), 2);
}

}  // namespace

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open wav file: " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw FormatError("malformed wav header: " + path.string());

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  const unsigned char* data = nullptr;
  std::uint32_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    const std::uint32_t chunk_len = rd_u32(hdr + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_len > bytes.size()) throw FormatError("truncated wav chunk: " + path.string());
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw FormatError("short fmt chunk");
      format = rd_u16(bytes.data() + body);
      channels = rd_u16(bytes.data() + body + 2);
      rate = rd_u32(bytes.data() + body + 4);
      bits = rd_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = bytes.data() + body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }
  if (!have_fmt || data == nullptr) throw FormatError("wav missing fmt or data chunk");
  if (channels != 1)
    throw UnsupportedError("expected mono audio, got " + std::to_string(channels) + " channels");

  Waveform wave;
  wave.sample_rate_hz = static_cast<int>(rate);
  if (format == 1 && bits == 16) {
    const std::size_t n = data_len / 2;
    wave.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int16_t v = static_cast<std::int16_t>(rd_u16(data + 2 * i));
      wave.samples[i] = static_cast<double>(v) / 32767.0;
    }
  } else if (format == 3 && bits == 32) {
    const std::size_t n = data_len / 4;
    wave.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      float v;
      std::memcpy(&v, data + 4 * i, 4);
      wave.samples[i] = static_cast<double>(v);
    }
  } else {
    throw UnsupportedError("unsupported wav encoding (format " + std::to_string(format) + ", " +
                           std::to_string(bits) + " bit)");
  }
  wave.validate();
  return wave;
}

void write_wav(const std::filesystem::path& path, const Waveform& wave) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write wav file: " + path.string());

  const std::uint32_t n = static_cast<std::uint32_t>(wave.samples.size());
  const std::uint32_t data_len = n * 2;
  f.write("RIFF", 4);
  wr_u32(f, 36 + data_len);
  f.write("WAVE", 4);
  f.write("fmt ", 4);
  wr_u32(f, 16);
  wr_u16(f, 1);  // PCM
  wr_u16(f, 1);  // mono
  wr_u32(f, static_cast<std::uint32_t>(wave.sample_rate_hz));
  wr_u32(f, static_cast<std::uint32_t>(wave.sample_rate_hz) * 2);
  wr_u16(f, 2);
  wr_u16(f, 16);
  f.write("data", 4);
  wr_u32(f, data_len);
  for (double s : wave.samples) {
    const double clipped = std::fmin(1.0, std::fmax(-1.0, s));
    const auto q = static_cast<std::int16_t>(std::lround(clipped * 32767.0));
    wr_u16(f, static_cast<std::uint16_t>(q));
  }
  if (!f) throw IoError("short write: " + path.string());
}

FrameSequence frame_signal(const Waveform& wave, double frame_ms, double hop_ms, Window window) {
  if (hop_ms <= 0.0 || frame_ms < hop_ms)
    throw ValidationError("need frame_ms >= hop_ms > 0");
  const auto w = static_cast<std::size_t>(std::lround(frame_ms * wave.sample_rate_hz / 1000.0));
  const auto h = static_cast<std::size_t>(std::lround(hop_ms * wave.sample_rate_hz / 1000.0));
  if (w == 0 || h == 0) throw ValidationError("frame/hop rounds to zero samples");
  if (wave.samples.size() < w) throw ValidationError("signal shorter than one frame");

  const std::size_t t_count = frame_count(wave.samples.size(), w, h);
  FrameSequence seq;
  seq.frame_len = w;
  seq.hop = h;
  seq.sample_rate_hz = wave.sample_rate_hz;
  seq.data.resize(t_count * w);

  std::vector<double> win(w, 1.0);
  if (window == Window::hann && w > 1) {
    for (std::size_t i = 0; i < w; ++i)
      win[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) / (w - 1));
  }
  for (std::size_t t = 0; t < t_count; ++t) {
    const double* src = wave.samples.data() + t * h;
    double* dst = seq.data.data() + t * w;
    for (std::size_t i = 0; i < w; ++i) dst[i] = src[i] * win[i];
  }
  return seq;
}

}  // namespace evc
