#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mzr/closure_data.hpp"
#include "mzr/lstm_closure.hpp"
#include "mzr/spectral.hpp"

namespace mzr {

/// Macro nonlinear term for modes 0..K:
///   -(ik/2) (u*u)_k - (ik/2) tau_k,
/// with the product dealiased on the macro grid and modes above K zeroed.
/// `stress_hat` may be null (no closure term).
void macro_nonlinear(const Eigen::VectorXcd& u, const Eigen::VectorXcd* stress_hat, const DomainParams& macro,
                     int cutoff, Eigen::VectorXcd& out);

/// Full macro right-hand side (k^2 - k^4) u_k + macro_nonlinear.
SpectralField macro_rhs(const SpectralField& u, const Eigen::VectorXcd& stress_hat, int cutoff);

/// One-sided coefficients of a physical stress, truncated to modes <= K.
Eigen::VectorXcd stress_coefficients(const Eigen::Ref<const Eigen::VectorXd>& stress, int cutoff);

/// Integrating-factor RK3 on the macro equation with the stress frozen over
/// the step.
class MacroSolver {
 public:
  MacroSolver(const DomainParams& macro, int cutoff, double dt);

  Eigen::VectorXcd step(const Eigen::VectorXcd& u, const Eigen::VectorXcd* stress_hat) const;

  const DomainParams& domain() const { return domain_; }
  int cutoff() const { return cutoff_; }
  double dt() const { return stepper_.dt(); }

 private:
  DomainParams domain_;
  int cutoff_;
  IfRk3Stepper stepper_;
};

/// tau = -2 (C_s Delta)^2 sqrt(2) |S| S.
Eigen::VectorXd smagorinsky_stress_1d(const Eigen::Ref<const Eigen::VectorXd>& strain, double cs, double delta);

struct ClosureSpec {
  enum class Kind { kLearned, kSmagorinsky, kZero };
  Kind kind = Kind::kZero;
  std::shared_ptr<const ClosureModel> model;  // kLearned
  double cs = 0.17;                          // kSmagorinsky
  double delta = 0.0;                        // kSmagorinsky; <= 0 means L/M

  static ClosureSpec zero() { return {}; }
  static ClosureSpec smagorinsky(double cs = 0.17, double delta = 0.0) { return {Kind::kSmagorinsky, nullptr, cs, delta}; }
  static ClosureSpec learned(std::shared_ptr<const ClosureModel> m) { return {Kind::kLearned, std::move(m), 0.17, 0.0}; }

  int window() const { return kind == Kind::kLearned ? model->window : 1; }
  std::string name() const;
};

struct ReducedRun {
  std::vector<SpectralField> frames;  // macro fields, one per step including t = 0
  std::vector<double> times;
  Eigen::MatrixXd strains;            // M x frames
  Eigen::MatrixXd stresses;           // M x frames (closure output at each frame)
};

struct ReducedOptions {
  /// Abort with InstabilityError once max|u| exceeds this or turns non-finite.
  double blowup_threshold = 1e3;
};

/// Runs the macro model from `u0` for round(T/dt) steps. `warmup_strains`
/// (M x n, oldest first) are the ground-truth strains preceding u0; the last
/// W-1 columns seed the learned closure's history, after which the solver's
/// own strains are used. Throws DomainError when the closure does not match
/// the macro grid.
ReducedRun simulate_reduced(const SpectralField& u0, const Eigen::Ref<const Eigen::MatrixXd>& warmup_strains,
                            const ClosureSpec& closure, const FilterSpec& filter, double duration, double dt,
                            const ReducedOptions& options = {});

/// Stores a reduced run in the dataset layout ("MZC1"); time indices are
/// first_time_index + step.
Dataset reduced_as_dataset(const ReducedRun& run, const FilterSpec& filter, int source_modes, double dt,
                           std::uint64_t first_time_index = 0);

/// CSV "t,u_0,...,u_{M-1}" of the physical macro field at every frame.
void write_probe_csv(const ReducedRun& run, const std::string& path);

}  // namespace mzr
