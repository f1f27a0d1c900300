#pragma once

#include <cstdint>

#include "mzr/lstm.hpp"

namespace mzr {

struct AdamHyper {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Moment accumulators shaped like the parameters, plus the step counter.
struct AdamState {
  LstmParams first_moment;
  LstmParams second_moment;
  std::uint64_t step = 0;
  AdamHyper hyper;

  static AdamState for_params(const LstmParams& params, const AdamHyper& hyper = {});
};

/// Bias-corrected Adam step applied in place:
///   m = b1 m + (1-b1) g,  v = b2 v + (1-b2) g^2,
///   p -= lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps)
void adam_update(LstmParams& params, const LstmParams& grads, AdamState& state);

}  // namespace mzr
