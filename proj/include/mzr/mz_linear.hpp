#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

namespace mzr {

/// Block linear system  x' = A11 x + A12 y,  y' = A21 x + A22 y.
struct LinearSystem {
  Eigen::MatrixXd a11, a12, a21, a22;
  Eigen::VectorXd x0, y0;

  /// Throws DomainError on non-conformable blocks or non-finite entries.
  void validate() const;
  Eigen::Index resolved_dim() const { return x0.size(); }
  Eigen::Index unresolved_dim() const { return y0.size(); }

  /// Scalar system with 1x1 blocks.
  static LinearSystem scalar(double a11, double a12, double a21, double a22, double x0, double y0);
};

/// Samples at t_n = n dt, n = 0..steps. Column n of `x` (and `y`) is the state at t_n.
struct LinearTrajectory {
  std::vector<double> times;
  Eigen::MatrixXd x;
  Eigen::MatrixXd y;
};

/// Classical RK4 on the coupled system.
LinearTrajectory full_solve(const LinearSystem& sys, double duration, double dt);

struct GleOptions {
  /// Maximum number of stored history samples.
  std::size_t history_capacity = 1u << 20;
};

/// Integrates the reduced equation for x alone,
///
///   x' = A11 x + int_0^t K(t-s) x(s) ds + A12 exp(A22 t) y0,   K(r) = A12 exp(A22 r) A21,
///
/// with the memory integral evaluated by the trapezoidal rule over the stored
/// history and time stepping by Heun's method (second order overall).
/// exp(A22 t) uses an eigendecomposition; A22 must be diagonalizable.
LinearTrajectory gle_solve(const LinearSystem& sys, double duration, double dt, const GleOptions& options = {});

/// exp(A t) for diagonalizable A (symmetric matrices take the self-adjoint path).
class DiagonalizableExp {
 public:
  explicit DiagonalizableExp(const Eigen::MatrixXd& a);
  Eigen::MatrixXd operator()(double t) const;

 private:
  bool symmetric_ = false;
  Eigen::MatrixXd real_vectors_;
  Eigen::VectorXd real_values_;
  Eigen::MatrixXcd vectors_;
  Eigen::MatrixXcd inverse_;
  Eigen::VectorXcd values_;
};

}  // namespace mzr
