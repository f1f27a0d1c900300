#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mzr/spectral.hpp"

namespace mzr {

/// ||a - b||_2 / ||b||_2, or nullopt when ||b|| = 0.
template <typename A, typename B>
std::optional<double> relative_error(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const double denom = b.norm();
  if (!(denom > 0.0)) return std::nullopt;
  return (a - b).norm() / denom;
}

/// Per-column relative error of two equally shaped matrices (columns = time).
std::vector<std::optional<double>> relative_error_series(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                                         const Eigen::Ref<const Eigen::MatrixXd>& b);

/// Pearson coefficient, nullopt when either series has zero variance.
std::optional<double> correlation_coeff(const Eigen::Ref<const Eigen::VectorXd>& x,
                                        const Eigen::Ref<const Eigen::VectorXd>& y);

struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::uint64_t> counts;
  bool degenerate = false;    // constant series: one bin holds everything

  std::uint64_t total() const;
};

/// Equal-width bins spanning [min, max] of the samples.
Histogram histogram(const Eigen::Ref<const Eigen::VectorXd>& samples, int n_bins);

/// Mean-removed autocorrelation for lags 0..max_lag, normalised so lag 0 is
/// 1. Nullopt for a constant series.
std::optional<Eigen::VectorXd> autocorrelation(const Eigen::Ref<const Eigen::VectorXd>& series, int max_lag);

/// First lag with rho <= 0, or nullopt if none within the computed range.
std::optional<int> first_zero_crossing(const Eigen::Ref<const Eigen::VectorXd>& rho);

/// 1-Wasserstein distance between the empirical distributions of two sample
/// sets (integral of |F_a - F_b|).
double wasserstein1(std::span<const double> a, std::span<const double> b);

/// Macro trajectory in the form the statistics need: physical values (M x T)
/// and one-sided modes 0..K (K+1 x T) at uniformly spaced times.
struct FieldSeries {
  std::vector<double> times;
  Eigen::MatrixXd values;
  Eigen::MatrixXcd modes;

  std::size_t size() const { return times.size(); }
  /// Re(u_hat_j(t)) over all frames.
  Eigen::VectorXd mode_real(int j) const { return modes.row(j).real().transpose(); }
};

FieldSeries field_series(std::span<const SpectralField> frames, std::span<const double> times, int max_mode);

struct StatsOptions {
  double horizon_threshold = 0.5;
  int histogram_bins = 50;
  int max_lag = 500;
  std::vector<int> modes = {1, 2, 3, 4};
};

struct ModeStats {
  int mode = 1;
  Histogram histogram;
  std::optional<Eigen::VectorXd> autocorr;
  std::optional<int> first_zero_lag;
  std::optional<double> w1_to_truth;  // absent for the truth row
};

struct RunStats {
  std::string name;
  std::vector<double> rel_err_times;
  std::vector<std::optional<double>> rel_err;
  double tracking_horizon = 0.0;  // first t with rel_err > threshold, else last t
  bool horizon_reached = false;   // true when the threshold was crossed
  double max_abs = 0.0;
  std::vector<ModeStats> modes;
};

struct StatsReport {
  StatsOptions options;
  RunStats truth;
  std::vector<RunStats> runs;
  nlohmann::json metadata = nlohmann::json::object();

  const RunStats& run(const std::string& name) const;
};

/// Assembles tracking error, histograms, autocorrelations and W1 distances
/// for each named run against the truth. Requires a run named "zero" as the
/// baseline and identical time grids; throws DomainError otherwise.
StatsReport compare_report(const FieldSeries& truth, const std::map<std::string, FieldSeries>& runs,
                           const StatsOptions& options = {});

nlohmann::json to_json(const StatsReport& r);
StatsReport report_from_json(const nlohmann::json& j);

/// summary.csv, tracking.csv, histograms.csv, autocorr.csv in `dir`.
void write_report_csvs(const StatsReport& r, const std::string& dir);

}  // namespace mzr
