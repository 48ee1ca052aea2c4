#ifndef EVOCONV_ARCHIVE_HPP
#define EVOCONV_ARCHIVE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace evc {

struct NamedArray {
  std::vector<std::size_t> shape;
  std::vector<float> data;
  bool operator==(const NamedArray&) const = default;
};

// The on-disk feature container ("EVCF"): named float32 arrays plus string
// metadata. Maps keep entries sorted, so serialization is canonical and a
// save/load round trip is byte-exact.
struct FeatureArchive {
  std::map<std::string, NamedArray> arrays;
  std::map<std::string, std::string> metadata;

  bool has(const std::string& name) const { return arrays.count(name) != 0; }
  const NamedArray& at(const std::string& name) const;

  void set(const std::string& name, std::vector<std::size_t> shape, std::vector<float> data);
  void set_1d(const std::string& name, std::span<const double> v);
  void set_2d(const std::string& name, std::size_t rows, std::size_t cols,
              std::span<const double> v);
  std::vector<double> get_doubles(const std::string& name) const;

  bool operator==(const FeatureArchive&) const = default;
};

// Binary layout (little-endian): magic "EVCF", version byte 1, metadata
// count + length-prefixed UTF-8 key/value pairs, array count + per-array
// name, u8 rank, u64 dims, float32 payload.
std::vector<std::uint8_t> serialize_archive(const FeatureArchive& archive);
FeatureArchive parse_archive(std::span<const std::uint8_t> bytes);

void save_archive(const std::filesystem::path& path, const FeatureArchive& archive);
FeatureArchive load_archive(const std::filesystem::path& path);

}  // namespace evc

#endif
