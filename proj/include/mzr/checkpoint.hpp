#pragma once

#include <cstdint>
#include <string>

#include "mzr/adam.hpp"
#include "mzr/lstm_closure.hpp"

namespace mzr {

struct Checkpoint {
  ClosureModel model;
  AdamState adam;
  std::string fingerprint;
};

/// Binary checkpoint "MZNN" (little-endian):
///   magic[4] version:u32 manifest_bytes:u64 manifest(JSON)
///   parameter tensors (f64, manifest order)
///   Adam first moments, then second moments (same order)
///   crc32(all preceding bytes):u32
///
/// The manifest holds layer dims, output dim, tensor names and shapes, the
/// forget convention, normalisation, window, Adam step/hyperparameters and
/// the config fingerprint.
inline constexpr char kCheckpointMagic[] = "MZNN";
inline constexpr std::uint32_t kCheckpointVersion = 1;

void checkpoint_write(const Checkpoint& ckpt, const std::string& path);
/// Throws FormatError on magic/version/CRC problems and ShapeError (naming
/// the tensor) when manifest shapes disagree with the layer dims or payload.
Checkpoint checkpoint_read(const std::string& path);

}  // namespace mzr
