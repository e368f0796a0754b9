#include "claw/nn/adam.hpp"

#include <cmath>

namespace claw::nn {

Adam::Adam(AdamConfig cfg, const std::vector<ParamBlock>& params) : cfg_(cfg) {
  for (const auto& p : params) {
    m_.emplace_back(p.size, 0.0);
    v_.emplace_back(p.size, 0.0);
  }
}

void Adam::step(std::span<ParamBlock> params,
                std::span<const ConstBlock> grads) {
  if (params.size() != m_.size() || grads.size() != m_.size()) {
    throw ShapeError("Adam::step: block count mismatch");
  }
  for (size_t b = 0; b < params.size(); ++b) {
    if (params[b].size != m_[b].size() || grads[b].size != m_[b].size()) {
      throw ShapeError("Adam::step: block size mismatch at '" +
                       params[b].name + "'");
    }
    const double* g = grads[b].data;
    for (size_t i = 0; i < grads[b].size; ++i) {
      if (!std::isfinite(g[i])) {
        throw NumericError("Adam::step: non-finite gradient in block '" +
                           params[b].name + "'");
      }
    }
  }
  ++step_count_;
  const double b1 = cfg_.beta1;
  const double b2 = cfg_.beta2;
  const double corr1 = 1.0 - std::pow(b1, static_cast<double>(step_count_));
  const double corr2 = 1.0 - std::pow(b2, static_cast<double>(step_count_));
  for (size_t b = 0; b < params.size(); ++b) {
    double* p = params[b].data;
    const double* g = grads[b].data;
    double* m = m_[b].data();
    double* v = v_[b].data();
    for (size_t i = 0; i < params[b].size; ++i) {
      m[i] = b1 * m[i] + (1.0 - b1) * g[i];
      v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
      const double mhat = m[i] / corr1;
      const double vhat = v[i] / corr2;
      p[i] -= cfg_.lr * mhat / (std::sqrt(vhat) + cfg_.eps);
    }
  }
}

}  // namespace claw::nn
