#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "mzr/closure_data.hpp"
#include "mzr/lstm.hpp"

namespace mzr {

/// Scalar standardisation of strain and stress, shared by all grid points so
/// the closure stays translation equivariant.
struct Normalization {
  double strain_mean = 0.0;
  double strain_scale = 1.0;
  double stress_mean = 0.0;
  double stress_scale = 1.0;

  /// Mean and standard deviation over the training split of `d`.
  static Normalization from_training(const Dataset& d);
  void validate() const;
  bool operator==(const Normalization&) const = default;
};

/// LSTM closure: stress at step n from the strains at steps n-W+1..n, run
/// from a zero state each time.
struct ClosureModel {
  LstmParams params;
  Normalization norm;
  int window = 20;

  Eigen::Index grid() const { return params.output_dim(); }
  void validate() const;
};

/// Forward pass over a window of physical strains (each M x batch, oldest
/// first). `stress` is M x batch in physical units.
struct ClosureEval {
  LstmTape tape;
  Eigen::MatrixXd stress;
};
ClosureEval closure_forward(const ClosureModel& model, std::span<const Eigen::MatrixXd> strain_window);

/// Stress only, without keeping the tape beyond the call.
Eigen::MatrixXd predict_stress(const ClosureModel& model, std::span<const Eigen::MatrixXd> strain_window);

/// Reverse pass for a loss gradient on the physical stress. Returns the
/// parameter gradient and the gradient with respect to each physical strain
/// in the window.
struct ClosureGradients {
  LstmParams params;
  std::vector<Eigen::MatrixXd> strains;
};
ClosureGradients closure_backward(const ClosureModel& model, const ClosureEval& eval,
                                  const Eigen::MatrixXd& stress_grad);

}  // namespace mzr
