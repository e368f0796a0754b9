#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "claw/common.hpp"

namespace claw::nn {

// Gradient buffers aligned with an Mlp's parameter layout.
struct GradientTape {
  std::vector<std::vector<double>> weight_grads;
  std::vector<std::vector<double>> bias_grads;

  void reset();
  void scale(double s);
};

// Named view of one parameter (or gradient) block, the unit the optimizer
// and the finite-difference tests operate on.
struct ParamBlock {
  std::string name;
  double* data{};
  size_t size{};
};
struct ConstBlock {
  const double* data{};
  size_t size{};
};

// Fully-connected network, tanh on hidden layers, identity on the output
// layer. Weights are flat row-major arrays with explicit shapes; weights[i]
// has shape (layer_dims[i+1] x layer_dims[i]).
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<int> layer_dims);  // zero parameters
  Mlp(std::vector<int> layer_dims, Rng& rng);  // uniform +-sqrt(6/(fi+fo))

  const std::vector<int>& layer_dims() const { return layer_dims_; }
  int input_dim() const { return layer_dims_.front(); }
  int output_dim() const { return layer_dims_.back(); }
  int num_layers() const { return static_cast<int>(layer_dims_.size()) - 1; }

  std::vector<double>& weights(int layer) { return weights_[layer]; }
  const std::vector<double>& weights(int layer) const { return weights_[layer]; }
  std::vector<double>& biases(int layer) { return biases_[layer]; }
  const std::vector<double>& biases(int layer) const { return biases_[layer]; }

  // Deterministic forward pass; retains activations for backward.
  std::vector<double> forward(std::span<const double> input);

  // Tape holds d(upstream . output)/d(params) for the retained forward.
  GradientTape backward(std::span<const double> upstream) const;

  // Accumulating variant used by batch training; optionally also emits the
  // gradient with respect to the input vector.
  void backward_into(std::span<const double> upstream, GradientTape& tape,
                     std::vector<double>* input_grad = nullptr) const;

  // Pure evaluation without touching the retained trace; safe to call
  // concurrently on an immutable net.
  std::vector<double> evaluate(std::span<const double> input) const;

  GradientTape make_tape() const;
  size_t num_params() const;

  // Parameter/gradient views in a fixed order (layer 0 weights, layer 0
  // bias, layer 1 weights, ...). `prefix` qualifies block names.
  std::vector<ParamBlock> param_blocks(const std::string& prefix);
  static std::vector<ConstBlock> tape_blocks(const GradientTape& tape);

  void save(std::ostream& out) const;
  static Mlp load(std::istream& in);

 private:
  void check_input(size_t n) const;

  std::vector<int> layer_dims_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<double>> biases_;

  // forward trace
  bool has_trace_ = false;
  std::vector<std::vector<double>> acts_;  // acts_[0] = input
};

}  // namespace claw::nn
