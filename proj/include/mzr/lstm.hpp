#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzr {

/// Cell-state update convention.
///   kComplement: S_t = (1 - f_t) S_{t-1} + i_t S~_t   (default)
///   kStandard:   S_t = f_t S_{t-1} + i_t S~_t
enum class ForgetGate { kComplement, kStandard };

std::string_view to_string(ForgetGate g);
ForgetGate forget_gate_from_string(std::string_view s);

struct LstmShape {
  int input_dim = 64;
  std::vector<int> hidden = {64, 64};
  int output_dim = 64;
  ForgetGate forget = ForgetGate::kComplement;

  void validate() const;
  bool operator==(const LstmShape&) const = default;
};

/// One LSTM layer. `weights` stacks the four gate matrices row-wise in the
/// order [forget; input; output; candidate], each hidden x (hidden + input)
/// acting on the concatenation [h_{t-1}, x_t].
struct LstmLayer {
  Eigen::MatrixXd weights;
  Eigen::VectorXd bias;

  Eigen::Index hidden_dim() const { return bias.size() / 4; }
  Eigen::Index input_dim() const { return weights.cols() - hidden_dim(); }
};

/// Stacked LSTM plus linear head y = V h + d. Gradients and optimizer
/// moments reuse this type.
struct LstmParams {
  std::vector<LstmLayer> layers;
  Eigen::MatrixXd head_weights;
  Eigen::VectorXd head_bias;
  ForgetGate forget = ForgetGate::kComplement;

  static LstmParams zeros(const LstmShape& shape);
  /// Weights uniform in +-1/sqrt(fan_in), zero biases, mt19937_64(seed).
  static LstmParams initialize(const LstmShape& shape, std::uint64_t seed);
  LstmParams zeros_like() const;

  LstmShape shape() const;
  Eigen::Index input_dim() const { return layers.front().input_dim(); }
  Eigen::Index output_dim() const { return head_bias.size(); }
  std::size_t parameter_count() const;

  /// Visits every tensor as (name, flat column-major view), in manifest order.
  template <typename F>
  void for_each_tensor(F&& f) {
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const std::string prefix = "layer" + std::to_string(l);
      f(prefix + ".weights", flat(layers[l].weights));
      f(prefix + ".bias", flat(layers[l].bias));
    }
    f(std::string("head.weights"), flat(head_weights));
    f(std::string("head.bias"), flat(head_bias));
  }
  template <typename F>
  void for_each_tensor(F&& f) const {
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const std::string prefix = "layer" + std::to_string(l);
      f(prefix + ".weights", flat(layers[l].weights));
      f(prefix + ".bias", flat(layers[l].bias));
    }
    f(std::string("head.weights"), flat(head_weights));
    f(std::string("head.bias"), flat(head_bias));
  }

  /// All parameters concatenated in manifest order.
  Eigen::VectorXd flatten() const;
  void assign(const Eigen::Ref<const Eigen::VectorXd>& flat_values);

  bool all_finite() const;

 private:
  template <typename M>
  static Eigen::Map<Eigen::VectorXd> flat(M& m) {
    return {m.data(), m.size()};
  }
  template <typename M>
  static Eigen::Map<const Eigen::VectorXd> flat(const M& m) {
    return {m.data(), m.size()};
  }
};

LstmParams& operator+=(LstmParams& a, const LstmParams& b);
LstmParams operator*(double s, const LstmParams& p);

/// Per-layer hidden h and cell state S, each hidden x batch.
struct LstmState {
  std::vector<Eigen::MatrixXd> hidden;
  std::vector<Eigen::MatrixXd> cell;

  static LstmState zeros(const LstmParams& params, Eigen::Index batch);
};

/// Intermediates of one layer at one time step.
struct CellRecord {
  Eigen::MatrixXd input;       // x_t (or the hidden output of the layer below)
  Eigen::MatrixXd prev_hidden; // h_{t-1}
  Eigen::MatrixXd prev_cell;   // S_{t-1}
  Eigen::MatrixXd gates;       // [f; i; o; S~] after activation, 4H x batch
  Eigen::MatrixXd cell;        // S_t
  Eigen::MatrixXd cell_tanh;   // tanh(S_t)
  Eigen::MatrixXd hidden;      // h_t
};

/// Forward tape for back-propagation through time. `steps[t][l]` is layer l at step t.
struct LstmTape {
  std::vector<std::vector<CellRecord>> steps;
  std::vector<Eigen::MatrixXd> outputs;
  LstmState final_state;

  std::size_t length() const { return steps.size(); }
};

/// One cell update for a single layer. Returns h_t and updates `hidden`/`cell`.
/// When `record` is non-null the intermediates are stored there.
Eigen::MatrixXd lstm_cell_step(const LstmLayer& layer, ForgetGate forget, const Eigen::MatrixXd& x,
                               Eigen::MatrixXd& hidden, Eigen::MatrixXd& cell, CellRecord* record = nullptr);

/// Runs the stack over `inputs` (each input_dim x batch) starting from `init`
/// and applies the head at every step.
LstmTape lstm_forward(const LstmParams& params, std::span<const Eigen::MatrixXd> inputs, const LstmState& init);
LstmTape lstm_forward(const LstmParams& params, std::span<const Eigen::MatrixXd> inputs);

/// Reverse sweep over a tape, one step at a time in decreasing order.
/// `step(t, dy)` takes dLoss/dy_t (nullptr = zero) and returns dLoss/dx_t.
class LstmBackward {
 public:
  LstmBackward(const LstmParams& params, const LstmTape& tape);

  Eigen::MatrixXd step(std::size_t t, const Eigen::MatrixXd* output_grad);
  const LstmParams& gradients() const { return grads_; }
  LstmParams take_gradients() { return std::move(grads_); }

 private:
  const LstmParams& params_;
  const LstmTape& tape_;
  LstmParams grads_;
  std::vector<Eigen::MatrixXd> carry_hidden_;
  std::vector<Eigen::MatrixXd> carry_cell_;
  std::size_t next_ = 0;
};

struct LstmGradients {
  LstmParams params;
  std::vector<Eigen::MatrixXd> inputs;
};

/// Exact reverse-mode gradients through all steps and layers. `output_grads`
/// has one entry per step; empty matrices count as zero.
LstmGradients bptt_gradients(const LstmParams& params, const LstmTape& tape,
                             std::span<const Eigen::MatrixXd> output_grads);

}  // namespace mzr
