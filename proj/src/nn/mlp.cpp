#include "claw/nn/mlp.hpp"

#include <cmath>
#include <istream>
#include <ostream>

namespace claw::nn {

void GradientTape::reset() {
  for (auto& g : weight_grads) std::fill(g.begin(), g.end(), 0.0);
  for (auto& g : bias_grads) std::fill(g.begin(), g.end(), 0.0);
}

void GradientTape::scale(double s) {
  for (auto& g : weight_grads)
    for (double& v : g) v *= s;
  for (auto& g : bias_grads)
    for (double& v : g) v *= s;
}

Mlp::Mlp(std::vector<int> layer_dims) : layer_dims_(std::move(layer_dims)) {
  if (layer_dims_.size() < 2) throw ShapeError("Mlp needs at least 2 dims");
  for (int d : layer_dims_) {
    if (d <= 0) throw ShapeError("Mlp: layer dims must be positive");
  }
  for (size_t l = 0; l + 1 < layer_dims_.size(); ++l) {
    weights_.emplace_back(
        static_cast<size_t>(layer_dims_[l + 1]) * layer_dims_[l], 0.0);
    biases_.emplace_back(layer_dims_[l + 1], 0.0);
  }
}

Mlp::Mlp(std::vector<int> layer_dims, Rng& rng) : Mlp(std::move(layer_dims)) {
  for (size_t l = 0; l < weights_.size(); ++l) {
    int fan_in = layer_dims_[l];
    int fan_out = layer_dims_[l + 1];
    double bound = std::sqrt(6.0 / (fan_in + fan_out));
    for (double& w : weights_[l]) w = rng.uniform(-bound, bound);
  }
}

void Mlp::check_input(size_t n) const {
  if (static_cast<int>(n) != input_dim()) {
    throw ShapeError("Mlp: input length " + std::to_string(n) +
                     " != layer_dims[0] = " + std::to_string(input_dim()));
  }
}

std::vector<double> Mlp::forward(std::span<const double> input) {
  check_input(input.size());
  acts_.assign(1, std::vector<double>(input.begin(), input.end()));
  const int layers = num_layers();
  for (int l = 0; l < layers; ++l) {
    const int in = layer_dims_[l];
    const int out = layer_dims_[l + 1];
    const double* w = weights_[l].data();
    const double* x = acts_[l].data();
    std::vector<double> y(biases_[l]);
    for (int o = 0; o < out; ++o) {
      const double* row = w + static_cast<size_t>(o) * in;
      double acc = 0.0;
      for (int i = 0; i < in; ++i) acc += row[i] * x[i];
      y[o] += acc;
    }
    if (l + 1 < layers) {
      for (double& v : y) v = std::tanh(v);
    }
    acts_.push_back(std::move(y));
  }
  has_trace_ = true;
  return acts_.back();
}

std::vector<double> Mlp::evaluate(std::span<const double> input) const {
  check_input(input.size());
  std::vector<double> x(input.begin(), input.end());
  const int layers = num_layers();
  for (int l = 0; l < layers; ++l) {
    const int in = layer_dims_[l];
    const int out = layer_dims_[l + 1];
    const double* w = weights_[l].data();
    std::vector<double> y(biases_[l]);
    for (int o = 0; o < out; ++o) {
      const double* row = w + static_cast<size_t>(o) * in;
      double acc = 0.0;
      for (int i = 0; i < in; ++i) acc += row[i] * x[i];
      y[o] += acc;
    }
    if (l + 1 < layers) {
      for (double& v : y) v = std::tanh(v);
    }
    x = std::move(y);
  }
  return x;
}

GradientTape Mlp::make_tape() const {
  GradientTape tape;
  for (size_t l = 0; l < weights_.size(); ++l) {
    tape.weight_grads.emplace_back(weights_[l].size(), 0.0);
    tape.bias_grads.emplace_back(biases_[l].size(), 0.0);
  }
  return tape;
}

GradientTape Mlp::backward(std::span<const double> upstream) const {
  GradientTape tape = make_tape();
  backward_into(upstream, tape, nullptr);
  return tape;
}

void Mlp::backward_into(std::span<const double> upstream, GradientTape& tape,
                        std::vector<double>* input_grad) const {
  if (!has_trace_) {
    throw StateError("Mlp::backward called without a prior forward");
  }
  if (static_cast<int>(upstream.size()) != output_dim()) {
    throw ShapeError("Mlp::backward: upstream length mismatch");
  }
  const int layers = num_layers();
  std::vector<double> g(upstream.begin(), upstream.end());
  for (int l = layers - 1; l >= 0; --l) {
    const int in = layer_dims_[l];
    const int out = layer_dims_[l + 1];
    // d(pre-activation): identity on the output layer, tanh' elsewhere.
    if (l < layers - 1) {
      const std::vector<double>& a = acts_[l + 1];
      for (int o = 0; o < out; ++o) g[o] *= 1.0 - a[o] * a[o];
    }
    const std::vector<double>& x = acts_[l];
    double* wg = tape.weight_grads[l].data();
    double* bg = tape.bias_grads[l].data();
    for (int o = 0; o < out; ++o) {
      const double go = g[o];
      bg[o] += go;
      double* row = wg + static_cast<size_t>(o) * in;
      const double* xi = x.data();
      for (int i = 0; i < in; ++i) row[i] += go * xi[i];
    }
    if (l > 0 || input_grad != nullptr) {
      std::vector<double> gx(in, 0.0);
      const double* w = weights_[l].data();
      for (int o = 0; o < out; ++o) {
        const double go = g[o];
        const double* row = w + static_cast<size_t>(o) * in;
        for (int i = 0; i < in; ++i) gx[i] += go * row[i];
      }
      if (l == 0) {
        for (int i = 0; i < in; ++i) (*input_grad)[i] += gx[i];
        break;
      }
      g = std::move(gx);
    }
  }
}

size_t Mlp::num_params() const {
  size_t n = 0;
  for (const auto& w : weights_) n += w.size();
  for (const auto& b : biases_) n += b.size();
  return n;
}

std::vector<ParamBlock> Mlp::param_blocks(const std::string& prefix) {
  std::vector<ParamBlock> blocks;
  for (size_t l = 0; l < weights_.size(); ++l) {
    blocks.push_back({prefix + " layer " + std::to_string(l) + " weights",
                      weights_[l].data(), weights_[l].size()});
    blocks.push_back({prefix + " layer " + std::to_string(l) + " bias",
                      biases_[l].data(), biases_[l].size()});
  }
  return blocks;
}

std::vector<ConstBlock> Mlp::tape_blocks(const GradientTape& tape) {
  std::vector<ConstBlock> blocks;
  for (size_t l = 0; l < tape.weight_grads.size(); ++l) {
    blocks.push_back({tape.weight_grads[l].data(), tape.weight_grads[l].size()});
    blocks.push_back({tape.bias_grads[l].data(), tape.bias_grads[l].size()});
  }
  return blocks;
}

void Mlp::save(std::ostream& out) const {
  out << "clawnet v1\n";
  out << "layers " << layer_dims_.size();
  for (int d : layer_dims_) out << ' ' << d;
  out << '\n';
  auto dump = [&out](const std::vector<double>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      out << format_g17(v[i]);
      out << ((i % 8 == 7 || i + 1 == v.size()) ? '\n' : ' ');
    }
  };
  for (int l = 0; l < num_layers(); ++l) {
    out << "layer " << l << " weights " << layer_dims_[l + 1] << ' '
        << layer_dims_[l] << '\n';
    dump(weights_[l]);
    out << "layer " << l << " bias " << layer_dims_[l + 1] << '\n';
    dump(biases_[l]);
  }
}

Mlp Mlp::load(std::istream& in) {
  std::string word, version;
  in >> word >> version;
  if (word != "clawnet" || version != "v1") {
    throw IoError("checkpoint: expected 'clawnet v1' header");
  }
  size_t ndims = 0;
  in >> word >> ndims;
  if (word != "layers" || ndims < 2 || ndims > 64) {
    throw IoError("checkpoint: bad layers line");
  }
  std::vector<int> dims(ndims);
  for (auto& d : dims) in >> d;
  Mlp net(dims);
  auto slurp = [&in](std::vector<double>& v) {
    for (double& x : v) {
      if (!(in >> x)) throw IoError("checkpoint: truncated parameter data");
    }
  };
  for (int l = 0; l < net.num_layers(); ++l) {
    int idx = 0, out = 0, fan_in = 0;
    in >> word >> idx >> word >> out >> fan_in;
    if (out != dims[l + 1] || fan_in != dims[l]) {
      throw IoError("checkpoint: weight shape mismatch at layer " +
                    std::to_string(l));
    }
    slurp(net.weights_[l]);
    in >> word >> idx >> word >> out;
    if (out != dims[l + 1]) {
      throw IoError("checkpoint: bias shape mismatch at layer " +
                    std::to_string(l));
    }
    slurp(net.biases_[l]);
  }
  return net;
}

}  // namespace claw::nn
