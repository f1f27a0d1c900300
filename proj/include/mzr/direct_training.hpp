#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mzr/adam.hpp"
#include "mzr/closure_data.hpp"
#include "mzr/lstm_closure.hpp"

namespace mzr {

enum class Split { kTrain, kTest };

struct DirectTrainConfig {
  int window = 20;
  int batch_size = 64;
  std::int64_t iterations = 200000;
  std::vector<int> hidden = {64, 64};
  ForgetGate forget = ForgetGate::kComplement;
  AdamHyper adam;
  std::int64_t eval_every = 1000;
  /// Windows per split used for the periodic error curve (evenly spaced).
  int eval_samples = 1024;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Input sequence (window entries, each M x batch, oldest first) and the
/// stress targets (M x batch) for the given end indices.
struct WindowBatch {
  std::vector<Eigen::MatrixXd> inputs;
  Eigen::MatrixXd targets;
};

/// Window for end index n covers samples n-W+1..n, all inside `split`.
/// Throws DomainError on underflow or a window crossing the split boundary.
WindowBatch make_window_batch(const Dataset& d, std::span<const std::uint64_t> indices, int window,
                              Split split = Split::kTrain);

/// Valid end indices [first, last) of windows that stay inside `split`.
std::pair<std::uint64_t, std::uint64_t> window_range(const Dataset& d, int window, Split split);

/// Pooled relative error ||pred - true||_F / ||true||_F. For a zero-norm
/// target the absolute RMS error is reported and `absolute` is set.
struct ErrorValue {
  double value = 0.0;
  bool absolute = false;
};
ErrorValue pooled_error(const Eigen::Ref<const Eigen::MatrixXd>& pred, const Eigen::Ref<const Eigen::MatrixXd>& truth);

/// Half mean squared stress error in normalised units over a batch (grid
/// points x windows). When `grads` is non-null the parameter gradient is
/// written there.
double batch_loss(const ClosureModel& model, const WindowBatch& batch, LstmParams* grads = nullptr);

struct ErrorRecord {
  std::int64_t iteration = 0;
  ErrorValue train;
  ErrorValue test;
};

struct DirectTrainResult {
  ClosureModel model;
  AdamState adam;
  std::vector<ErrorRecord> history;
};

/// Adam on the mean squared (normalised) stress error over uniformly sampled
/// training windows. Records train/test error every eval_every iterations
/// and after the last one. Throws TrainingError on a non-finite loss.
DirectTrainResult train_direct(const Dataset& d, const DirectTrainConfig& cfg);

/// Predicted stresses for windows ending at `indices`, evaluated in chunks.
Eigen::MatrixXd predict_windows(const ClosureModel& model, const Dataset& d, std::span<const std::uint64_t> indices,
                                Split split);

/// Error over evenly spaced windows of a split (all of them when max_samples <= 0).
ErrorValue split_error(const ClosureModel& model, const Dataset& d, Split split, int max_samples);

/// Per macro grid location, over every test window.
struct AprioriReport {
  std::vector<ErrorValue> rel_err;
  std::vector<std::optional<double>> correlation;
  ErrorValue pooled;

  std::optional<double> median_correlation() const;
};
AprioriReport evaluate_apriori(const ClosureModel& model, const Dataset& d);
/// Same metrics from precomputed predictions (M x T) and truth (M x T).
AprioriReport apriori_metrics(const Eigen::Ref<const Eigen::MatrixXd>& pred,
                              const Eigen::Ref<const Eigen::MatrixXd>& truth);

/// Columns iteration,train_rel_err,test_rel_err,train_absolute,test_absolute.
void write_error_history_csv(const std::vector<ErrorRecord>& history, const std::string& path);

}  // namespace mzr
