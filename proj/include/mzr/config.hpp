#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mzr/closure_data.hpp"
#include "mzr/coupled_training.hpp"
#include "mzr/diagnostics.hpp"
#include "mzr/direct_training.hpp"
#include "mzr/spectral.hpp"

namespace mzr {

struct DnsConfig {
  DomainParams domain{kKsLength, 128, 1e-3};
  double transient = 1000.0;      // discarded before the first saved frame
  double duration = 20000.0;      // saved span
  double save_interval = 0.1;     // also the macro time step
  int ic_max_mode = 4;
  double ic_amplitude = 0.6;
};

enum class CoupledInit { kFresh, kDirect };

struct SimulateConfig {
  double duration = 1000.0;
  /// Learned closures to run, by checkpoint: "direct" and/or "coupled".
  std::vector<std::string> models = {"direct", "coupled"};
  double smagorinsky_cs = 0.17;
  double smagorinsky_delta = 0.0;  // <= 0 means L/M
  double blowup_threshold = 1e3;
};

struct MzDemoConfig {
  double a11 = -0.5, a12 = 1.0, a21 = -1.0, a22 = -2.0;
  double x0 = 1.0, y0 = 0.5;
  double duration = 5.0;
  double dt = 1e-3;
};

/// Fully resolved run configuration. Every stage reads the same struct; the
/// fingerprint covers everything except the output directory.
struct RunConfig {
  std::uint64_t seed = 0;
  std::string out = "runs/desk";
  DnsConfig dns;
  FilterSpec filter{16, 64};
  double train_test_ratio = 10.0;
  DirectTrainConfig direct;
  CoupledTrainConfig coupled;
  CoupledInit coupled_init = CoupledInit::kFresh;
  SimulateConfig simulate;
  StatsOptions stats;
  MzDemoConfig mz_demo;

  /// Throws ConfigError on any inconsistent value.
  void validate() const;
  /// FNV-1a 64 of the canonical JSON (keys sorted, "out" removed), as 16 hex digits.
  std::string fingerprint() const;
  std::uint64_t fingerprint_value() const;
};

std::vector<std::string> profile_names();
/// Built-in profiles "desk" and "paper-full" as JSON.
nlohmann::json profile_json(std::string_view name);

nlohmann::json to_json(const RunConfig& c);
/// Strict parse: unknown keys, missing keys and wrong types are ConfigErrors.
RunConfig config_from_json(const nlohmann::json& j);

/// Profile defaults overlaid with an optional JSON file (merge patch), then
/// parsed strictly and validated.
RunConfig load_config(std::string_view profile, const std::string& path = {});

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace mzr
