#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latentdrive {

/// Named n-d arrays plus a free-form metadata string, stored little-endian.
///
/// File layout:
///   "LDCK" | u32 version | u64 metadata length | metadata bytes | u32 entry count
///   per entry: u32 name length | name | u8 dtype | u32 ndim | u64 dims[ndim] | payload
///   u32 CRC-32 of every preceding byte
class ArrayArchive {
 public:
  enum class DType : std::uint8_t { kFloat32 = 0, kUInt8 = 1 };

  struct Entry {
    std::string name;
    DType dtype = DType::kFloat32;
    std::vector<std::int64_t> shape;
    std::vector<std::uint8_t> bytes;

    std::int64_t numel() const;
  };

  static constexpr std::uint32_t kVersion = 1;

  std::string metadata;

  /// Throws ContractError on a duplicate name or a size/shape mismatch.
  void put_f32(const std::string& name, const std::vector<std::int64_t>& shape, const float* data);
  void put_u8(const std::string& name, const std::vector<std::int64_t>& shape, const std::uint8_t* data);

  bool has(const std::string& name) const;
  /// Throws LoadError when absent.
  const Entry& get(const std::string& name) const;
  std::vector<float> get_f32(const std::string& name) const;
  const std::vector<Entry>& entries() const { return entries_; }

  void save(const std::string& path) const;
  /// Throws LoadError on a missing file, bad magic, unknown version,
  /// truncation or checksum mismatch.
  static ArrayArchive load(const std::string& path);

 private:
  void put(Entry entry);
  std::vector<Entry> entries_;
};

}  // namespace latentdrive
