#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mzr/adam.hpp"
#include "mzr/closure_data.hpp"
#include "mzr/direct_training.hpp"
#include "mzr/lstm_closure.hpp"
#include "mzr/reduced_model.hpp"

namespace mzr {

/// Two-sided mode vector z_a = u_hat_{a-K}, a = 0..2K, from one-sided
/// coefficients (z_{-k} = conj(u_hat_k)).
Eigen::VectorXcd two_sided(const Eigen::Ref<const Eigen::VectorXcd>& one_sided, int cutoff);
/// Inverse of two_sided, written into a one-sided vector of length n_coeffs
/// (modes above K zero).
Eigen::VectorXcd one_sided(const Eigen::Ref<const Eigen::VectorXcd>& z, int cutoff, Eigen::Index n_coeffs);

/// Toeplitz convolution matrix C(z)_{ab} = z_{a-b+K} for |a-b| <= K, so that
/// (C(z) w)_k = sum_{p+q=k} z_p w_q over |p|, |q|, |k| <= K.
Eigen::MatrixXcd convolution_matrix(const Eigen::Ref<const Eigen::VectorXcd>& z, int cutoff);

enum class JacobianScheme { kEuler, kIntegratingFactor };

/// J(s) = d u_hat(t+s) / d u_hat(t) in two-sided mode space.
struct JacobianState {
  Eigen::MatrixXcd jacobian;
  double s = 0.0;

  static JacobianState identity(int cutoff);
};

/// Advances dJ/ds = diag(k^2 - k^4) J - i diag(k) C(u_hat) J by one step h
/// using u_hat at the start of the step. Euler: J + h J'. Integrating factor:
/// E(h) (J + h N'J) with the linear part exact.
JacobianState jacobian_step(const JacobianState& state, const Eigen::Ref<const Eigen::VectorXcd>& z,
                            const DomainParams& macro, int cutoff, double h,
                            JacobianScheme scheme = JacobianScheme::kEuler);

struct SensitivityOptions {
  int substeps = 50;
  JacobianScheme scheme = JacobianScheme::kEuler;
};

/// Sensitivities of one macro step with the stress frozen: J = du'/du and
/// G = du'/dtau_hat (dG/ds = (L - i k C) G - (i/2) diag(k), G(0) = 0), both
/// two-sided. The field along the step comes from `substeps` IF-RK3 steps.
struct StepSensitivity {
  Eigen::MatrixXcd jacobian;
  Eigen::MatrixXcd stress;
};
StepSensitivity step_sensitivity(const Eigen::VectorXcd& u, const Eigen::VectorXcd* stress_hat,
                                 const DomainParams& macro, int cutoff, double dt, const SensitivityOptions& opt);

/// One rollout anchor: the W-1 ground-truth strains preceding u0 (M x (W-1)),
/// the initial macro field and the true fields after 1..L steps.
struct RolloutSample {
  Eigen::MatrixXd warmup;
  Eigen::VectorXcd u0;
  std::vector<Eigen::VectorXcd> targets;
};

struct RolloutTape {
  std::vector<Eigen::VectorXcd> fields;     // u_0..u_L, one-sided
  Eigen::MatrixXd strains;                  // M x (W-1+L): warm-up then s_0..s_{L-1}
  std::vector<ClosureEval> closure;         // per step l
  std::vector<Eigen::VectorXcd> stress_hat; // per step l
  std::vector<StepSensitivity> sensitivity; // per step l (empty without options)
  int warmup_count = 0;
};

/// Alternates stress = closure(last W strains) and u_{l+1} = Solver(u_l, stress)
/// for L steps. Sensitivities are recorded when `sens` is non-null. Throws
/// InstabilityError with the step index on a non-finite field.
RolloutTape coupled_rollout(const ClosureModel& model, const RolloutSample& sample, const MacroSolver& solver,
                            int steps, const SensitivityOptions* sens = nullptr);

/// Loss sum_k |z_L - target_L|^2 (two-sided), or the sum over all l when
/// `all_steps`, scaled by `weight`.
double rollout_loss(const RolloutTape& tape, const RolloutSample& sample, int cutoff, bool all_steps,
                    double weight = 1.0);

/// Cotangents lambda_l = d loss / d conj(z_l) * 2 for l = 1..L (index l-1) of
/// rollout_loss; zero vectors where the loss does not depend on z_l.
std::vector<Eigen::VectorXcd> rollout_loss_grads(const RolloutTape& tape, const RolloutSample& sample, int cutoff,
                                                 bool all_steps, double weight = 1.0);

/// Parameter gradient of a loss with cotangents `loss_grads` (two-sided,
/// one per step l = 1..L) by the backward chain through the recorded step
/// sensitivities, the stress injection and strain extraction maps, and BPTT
/// through every closure window.
LstmParams coupled_gradient(const ClosureModel& model, const RolloutTape& tape, const DomainParams& macro,
                            int cutoff, std::span<const Eigen::VectorXcd> loss_grads);

struct CoupledTrainConfig {
  int rollout = 20;
  int batch_size = 16;
  std::int64_t iterations = 20000;
  int window = 20;
  std::vector<int> hidden = {64, 64};
  ForgetGate forget = ForgetGate::kComplement;
  AdamHyper adam;
  SensitivityOptions sensitivity;
  bool loss_all_steps = false;
  std::int64_t eval_every = 50;
  int eval_anchors = 64;
  std::vector<int> curve_steps = {5, 10, 15, 20};
  std::uint64_t seed = 0;

  void validate() const;
};

/// Filtered macro fields aligned with a dataset's samples.
struct CoupledData {
  Dataset dataset;
  std::vector<Eigen::VectorXcd> fields;  // one-sided, macro grid
  DomainParams macro;                    // dt = dataset macro_dt

  void validate() const;
};

CoupledData coupled_data(Dataset dataset, const std::vector<SpectralField>& full_frames);

/// Anchor n: rollout from field n with targets n+1..n+L; needs n >= W-1 and
/// n+L inside the split.
std::pair<std::uint64_t, std::uint64_t> anchor_range(const CoupledData& data, int window, int rollout, Split split);
RolloutSample rollout_sample(const CoupledData& data, std::uint64_t anchor, int window, int rollout);

struct CurvePoint {
  std::int64_t iteration = 0;
  int step = 0;
  double rel_err = 0.0;
};

/// Pooled ||z_l - target_l|| / ||target_l|| over evenly spaced test anchors
/// for each l in `steps`.
std::vector<double> rollout_errors(const ClosureModel& model, const CoupledData& data, int rollout,
                                   std::span<const int> steps, int anchors, Split split);

struct CoupledTrainResult {
  ClosureModel model;
  AdamState adam;
  std::vector<CurvePoint> curves;
  std::vector<double> loss;
};

/// Adam on the rollout loss over uniformly sampled training anchors. When
/// `init` is given training starts from it (warm start); otherwise from a
/// fresh initialisation. Curves are recorded at iteration 0, every
/// eval_every iterations and at the end.
CoupledTrainResult train_coupled(const CoupledData& data, const CoupledTrainConfig& cfg,
                                 const std::optional<ClosureModel>& init = std::nullopt);

/// Columns iteration,l,rel_err.
void write_curves_csv(const std::vector<CurvePoint>& curves, const std::string& path);

}  // namespace mzr
