#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mzr/binary_io.hpp"
#include "mzr/spectral.hpp"

namespace mzr {

/// Header of a field trajectory file "MZT1" (little-endian):
///   magic[4] version:u32 N:u32 K:u32 length:f64 dt:f64 save_interval:f64
///   start_time:f64 frame_count:u64 config_fingerprint:u64
///   frame_count x { N*f64 physical samples }
///   crc32(body):u32
/// K is the sharp-filter cutoff the fields were band-limited to (0 = none).
struct TrajectoryHeader {
  DomainParams domain;
  int cutoff = 0;
  double save_interval = 0.1;
  double start_time = 0.0;
  std::uint64_t frame_count = 0;
  std::uint64_t fingerprint = 0;
};

inline constexpr char kTrajectoryMagic[] = "MZT1";
inline constexpr std::uint32_t kTrajectoryVersion = 1;

/// Streams frames to disk; `close()` checks that exactly frame_count frames
/// were appended and writes the CRC trailer.
class TrajectoryWriter {
 public:
  TrajectoryWriter(const std::string& path, const TrajectoryHeader& header);
  void append(const SpectralField& field);
  void close();
  std::uint64_t written() const { return written_; }

 private:
  io::BinaryWriter writer_;
  TrajectoryHeader header_;
  std::uint64_t written_ = 0;
  bool closed_ = false;
};

struct TrajectoryFile {
  TrajectoryHeader header;
  std::vector<SpectralField> frames;

  double time(std::size_t i) const { return header.start_time + static_cast<double>(i) * header.save_interval; }
};

TrajectoryFile read_trajectory(const std::string& path);
void write_trajectory(const std::string& path, const TrajectoryHeader& header,
                      const std::vector<SpectralField>& frames);

}  // namespace mzr
