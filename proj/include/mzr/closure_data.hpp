#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "mzr/spectral.hpp"

namespace mzr {

/// Sharp spectral cutoff K and the macro grid size M used to represent
/// filtered fields in physical space.
struct FilterSpec {
  int cutoff = 16;
  int macro_grid = 64;

  /// Requires K >= 1, K < N/2 of the source, M even and M >= 2K+1.
  void validate(int source_modes) const;
  /// Macro domain: same length and dt as `source`, M grid points.
  DomainParams macro_domain(const DomainParams& source) const { return source.with_modes(macro_grid); }

  bool operator==(const FilterSpec&) const = default;
};

struct StressSample {
  Eigen::VectorXd strain;
  Eigen::VectorXd stress;
  std::uint64_t time_index = 0;
};

/// Time-ordered (strain, stress) pairs on the macro grid. Column i of
/// `strains`/`stresses` is sample i. Samples [0, split_index) are training
/// data, [split_index, size) test data.
struct Dataset {
  Eigen::MatrixXd strains;
  Eigen::MatrixXd stresses;
  std::vector<std::uint64_t> time_index;
  double macro_dt = 0.1;
  FilterSpec filter;
  int source_modes = 256;
  std::uint64_t split_index = 0;

  std::size_t size() const { return time_index.size(); }
  int grid() const { return filter.macro_grid; }
  StressSample sample(std::size_t i) const;
  void validate() const;
};

/// Keeps modes j <= K and represents the result on the M-point macro grid.
SpectralField sharp_filter(const SpectralField& field, const FilterSpec& spec);

/// Filtered stress tau = filter(u u) - filter(ubar ubar) on the macro grid.
/// Its modes are exactly the sum of u_p u_q over p+q=k with |p|>K or |q|>K.
Eigen::VectorXd subgrid_stress(const SpectralField& full, const FilterSpec& spec);

/// Spectral stress coefficients (one-sided, macro layout, zero above K).
Eigen::VectorXcd subgrid_stress_coeffs(const SpectralField& full, const FilterSpec& spec);

/// Resolved strain d(ubar)/dx sampled on the macro grid.
Eigen::VectorXd strain(const SpectralField& macro);

/// split = round(n * ratio / (ratio + 1)), the contiguous train/test boundary.
std::uint64_t split_index_for(std::size_t n, double train_test_ratio = 10.0);

/// One (strain, stress) sample per frame. Time indices are
/// first_time_index + frame position.
Dataset generate_dataset(const Trajectory& traj, const FilterSpec& spec, double train_test_ratio = 10.0,
                         std::uint64_t first_time_index = 0);
Dataset generate_dataset(const std::vector<SpectralField>& frames, double macro_dt, const FilterSpec& spec,
                         double train_test_ratio = 10.0, std::uint64_t first_time_index = 0);

/// Binary dataset file "MZC1" (little-endian):
///   magic[4] version:u32 N:u32 K:u32 M:u32 macro_dt:f64 count:u64 split:u64
///   count x { time_index:u64 strain:M*f64 stress:M*f64 }
///   crc32(body):u32
inline constexpr char kDatasetMagic[] = "MZC1";
inline constexpr std::uint32_t kDatasetVersion = 1;

void dataset_write(const Dataset& d, const std::string& path);
Dataset dataset_read(const std::string& path);

}  // namespace mzr
