#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzr::io {

/// Little-endian binary writer that keeps a running CRC32 of everything
/// written since the last `reset_crc()`.
class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path);

  void bytes(std::span<const std::uint8_t> data);
  void magic(std::string_view tag);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f64(double v);
  void f64s(std::span<const double> values);

  void reset_crc() { crc_ = 0; }
  std::uint32_t crc() const { return crc_; }
  /// Writes the current CRC (untracked) and flushes. Throws IoError on failure.
  void finish_with_crc();

 private:
  std::ofstream out_;
  std::string path_;
  std::uint32_t crc_ = 0;
  std::vector<std::uint8_t> scratch_;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path);

  /// Throws FormatError naming `expected` when the next four bytes differ.
  void expect_magic(std::string_view expected);
  std::uint32_t u32();
  std::uint64_t u64();
  double f64();
  void f64s(std::span<double> out);
  std::string string(std::size_t n);

  void reset_crc() { crc_ = 0; }
  std::uint32_t crc() const { return crc_; }
  /// Reads the trailer and compares it against the running CRC.
  void check_crc_trailer();
  std::uint64_t remaining() const { return size_ - pos_; }

 private:
  void read_raw(void* dst, std::size_t n);

  std::vector<std::uint8_t> data_;
  std::uint64_t size_ = 0;
  std::uint64_t pos_ = 0;
  std::uint32_t crc_ = 0;
  std::string path_;
};

/// CRC32 (zlib polynomial) of a file's full contents, for artifact comparison.
std::uint32_t file_crc32(const std::string& path);

}  // namespace mzr::io
