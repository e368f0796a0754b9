#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "claw/nn/mlp.hpp"

namespace claw::nn {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Adaptive-moment optimizer over an ordered list of parameter blocks.
// Moment buffers mirror the block sizes exactly.
class Adam {
 public:
  Adam(AdamConfig cfg, const std::vector<ParamBlock>& params);

  // Applies one update. Gradients must be ordered like the params the
  // optimizer was built with; a non-finite gradient entry is rejected with
  // a NumericError naming the offending block.
  void step(std::span<ParamBlock> params, std::span<const ConstBlock> grads);

  int64_t step_count() const { return step_count_; }
  AdamConfig& config() { return cfg_; }

 private:
  AdamConfig cfg_;
  int64_t step_count_ = 0;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
};

}  // namespace claw::nn
