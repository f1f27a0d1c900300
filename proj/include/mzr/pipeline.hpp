#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mzr/config.hpp"

namespace mzr {

enum class Stage { kDns, kDataset, kTrainDirect, kTrainCoupled, kSimulate, kStats, kMzDemo };

std::string_view stage_name(Stage s);
Stage stage_from_name(std::string_view name);

/// Artifact file names inside the output directory.
namespace artifact {
inline constexpr char kTrajectory[] = "trajectory.mzt";
inline constexpr char kDataset[] = "dataset.mzc";
inline constexpr char kMacro[] = "macro.mzt";
inline constexpr char kDirectCheckpoint[] = "direct.ckpt";
inline constexpr char kDirectHistory[] = "direct_history.csv";
inline constexpr char kDirectApriori[] = "direct_apriori.csv";
inline constexpr char kCoupledCheckpoint[] = "coupled.ckpt";
inline constexpr char kCoupledCurves[] = "coupled_curves.csv";
inline constexpr char kCoupledLoss[] = "coupled_loss.csv";
inline constexpr char kStatsDir[] = "stats";
inline constexpr char kStatsReport[] = "stats/report.json";
inline constexpr char kMzDemo[] = "mz_demo.csv";
}  // namespace artifact

/// Hash of the configuration sections a stage depends on, including those of
/// its upstream stages.
std::uint64_t stage_fingerprint(const RunConfig& cfg, Stage s);
std::string fingerprint_hex(std::uint64_t v);

/// Sidecar "<stage>.manifest.json": fingerprint, CRC32 per artifact and
/// stage-specific results.
struct StageManifest {
  std::string stage;
  std::string fingerprint;
  std::map<std::string, std::string> artifacts;  // relative path -> crc32 hex
  nlohmann::json results = nlohmann::json::object();
};

std::filesystem::path manifest_path(const std::filesystem::path& out, Stage s);
StageManifest read_manifest(const std::filesystem::path& out, Stage s);

/// Runs one stage with `cfg`, writing into cfg.out. Input artifacts from
/// upstream stages must exist and carry matching fingerprints (ConfigError
/// otherwise). Numerical failures surface as InstabilityError/TrainingError.
StageManifest run_stage(Stage s, const RunConfig& cfg, std::ostream& log);

}  // namespace mzr
