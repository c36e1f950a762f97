// Copyright 2026 The QCAE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcae/nn/layers.hpp"

#include <cmath>

#include "qcae/errors.hpp"

namespace qcae::nn {

std::string to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::Conv2d: return "conv2d";
    case LayerKind::TConv2d: return "tconv2d";
    case LayerKind::Dense: return "dense";
    case LayerKind::LeakyRelu: return "leaky_relu";
    case LayerKind::Sigmoid: return "sigmoid";
    case LayerKind::Flatten: return "flatten";
    case LayerKind::Reshape: return "reshape";
  }
  return "?";
}

LayerSpec LayerSpec::conv2d(std::size_t in, std::size_t out, std::size_t kernel,
                            std::size_t stride, std::size_t padding) {
  LayerSpec s;
  s.kind = LayerKind::Conv2d;
  s.in_channels = in;
  s.out_channels = out;
  s.kernel = kernel;
  s.stride = stride;
  s.padding = padding;
  return s;
}

LayerSpec LayerSpec::tconv2d(std::size_t in, std::size_t out, std::size_t kernel,
                             std::size_t stride, std::size_t padding,
                             std::size_t output_padding) {
  LayerSpec s = conv2d(in, out, kernel, stride, padding);
  s.kind = LayerKind::TConv2d;
  s.output_padding = output_padding;
  return s;
}

LayerSpec LayerSpec::dense(std::size_t in, std::size_t out) {
  LayerSpec s;
  s.kind = LayerKind::Dense;
  s.in_features = in;
  s.out_features = out;
  return s;
}

LayerSpec LayerSpec::leaky_relu(double negative_slope) {
  LayerSpec s;
  s.kind = LayerKind::LeakyRelu;
  s.negative_slope = negative_slope;
  return s;
}

LayerSpec LayerSpec::sigmoid() {
  LayerSpec s;
  s.kind = LayerKind::Sigmoid;
  return s;
}

LayerSpec LayerSpec::flatten() { return LayerSpec{}; }

LayerSpec LayerSpec::reshape(Shape target) {
  LayerSpec s;
  s.kind = LayerKind::Reshape;
  s.target_shape = std::move(target);
  return s;
}

namespace {

[[noreturn]] void shape_mismatch(const LayerSpec& spec, const Shape& expected,
                                 const Shape& got) {
  throw UsageError(to_string(spec.kind) + " expects input shape " + shape_to_string(expected) +
                   ", got " + shape_to_string(got));
}

void check_conv_hyper(const LayerSpec& spec) {
  if (spec.kernel < 1 || spec.stride < 1 || spec.in_channels < 1 || spec.out_channels < 1) {
    throw ConfigError(to_string(spec.kind) +
                      " needs kernel, stride and channel counts >= 1");
  }
}

}  // namespace

Shape infer_output_shape(const LayerSpec& spec, const Shape& input) {
  switch (spec.kind) {
    case LayerKind::Conv2d: {
      check_conv_hyper(spec);
      if (input.size() != 3 || input[0] != spec.in_channels) {
        shape_mismatch(spec, {spec.in_channels, input.size() > 1 ? input[1] : 0,
                              input.size() > 2 ? input[2] : 0}, input);
      }
      auto dim = [&](std::size_t x) -> std::size_t {
        const std::size_t padded = x + 2 * spec.padding;
        if (padded < spec.kernel) {
          throw UsageError("conv2d kernel " + std::to_string(spec.kernel) +
                           " larger than padded input of input shape " +
                           shape_to_string(input));
        }
        return (padded - spec.kernel) / spec.stride + 1;
      };
      return {spec.out_channels, dim(input[1]), dim(input[2])};
    }
    case LayerKind::TConv2d: {
      check_conv_hyper(spec);
      if (input.size() != 3 || input[0] != spec.in_channels) {
        shape_mismatch(spec, {spec.in_channels, input.size() > 1 ? input[1] : 0,
                              input.size() > 2 ? input[2] : 0}, input);
      }
      auto dim = [&](std::size_t x) -> std::size_t {
        const long long full = static_cast<long long>((x - 1) * spec.stride + spec.kernel +
                                                      spec.output_padding) -
                               2 * static_cast<long long>(spec.padding);
        if (x < 1 || full < 1) {
          throw UsageError("tconv2d produces empty output for input shape " +
                           shape_to_string(input));
        }
        return static_cast<std::size_t>(full);
      };
      return {spec.out_channels, dim(input[1]), dim(input[2])};
    }
    case LayerKind::Dense:
      if (input.size() != 1 || input[0] != spec.in_features) {
        shape_mismatch(spec, {spec.in_features}, input);
      }
      return {spec.out_features};
    case LayerKind::LeakyRelu:
    case LayerKind::Sigmoid:
      return input;
    case LayerKind::Flatten:
      return {shape_size(input)};
    case LayerKind::Reshape:
      if (shape_size(spec.target_shape) != shape_size(input)) {
        shape_mismatch(spec, spec.target_shape, input);
      }
      return spec.target_shape;
  }
  return input;
}

Tensor Layer::forward(const Tensor& input) {
  output_shape_ = infer_output_shape(spec_, input.shape());
  input_ = input;
  has_cache_ = true;
  return do_forward(input);
}

Tensor Layer::backward(const Tensor& upstream) {
  if (!has_cache_) {
    throw UsageError(to_string(spec_.kind) + " backward called before forward");
  }
  if (upstream.shape() != output_shape_) {
    throw UsageError(to_string(spec_.kind) + " backward expects upstream shape " +
                     shape_to_string(output_shape_) + ", got " +
                     shape_to_string(upstream.shape()));
  }
  return do_backward(upstream);
}

void Layer::zero_grad() {
  for (auto& g : grads_) g.fill(0.0);
}

void Layer::add_parameter(Tensor init) {
  grads_.push_back(Tensor::zeros(init.shape()));
  params_.push_back(std::move(init));
}

namespace {

Tensor uniform(Shape shape, double bound, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-bound, bound);
  Tensor t(std::move(shape));
  for (auto& v : t.data()) v = dist(rng);
  return t;
}

class Conv2d final : public Layer {
 public:
  Conv2d(const LayerSpec& spec, std::mt19937_64& rng) : Layer(spec) {
    check_conv_hyper(spec);
    const double bound =
        std::sqrt(1.0 / static_cast<double>(spec.in_channels * spec.kernel * spec.kernel));
    add_parameter(uniform({spec.out_channels, spec.in_channels, spec.kernel, spec.kernel},
                          bound, rng));
    add_parameter(uniform({spec.out_channels}, bound, rng));
  }

 protected:
  Tensor do_forward(const Tensor& in) override {
    const auto& s = spec_;
    const std::size_t C = s.in_channels, H = in.shape()[1], W = in.shape()[2];
    const std::size_t O = s.out_channels, OH = output_shape_[1], OW = output_shape_[2];
    const std::size_t K = s.kernel;
    const auto& w = params_[0];
    const auto& b = params_[1];
    Tensor out(output_shape_);
    for (std::size_t o = 0; o < O; ++o) {
      double* op = &out[o * OH * OW];
      for (std::size_t i = 0; i < OH * OW; ++i) op[i] = b[o];
      for (std::size_t c = 0; c < C; ++c) {
        const double* ip = &in[c * H * W];
        for (std::size_t ky = 0; ky < K; ++ky) {
          for (std::size_t kx = 0; kx < K; ++kx) {
            const double wv = w[((o * C + c) * K + ky) * K + kx];
            for (std::size_t y = 0; y < OH; ++y) {
              const long long iy = static_cast<long long>(y * s.stride + ky) -
                                   static_cast<long long>(s.padding);
              if (iy < 0 || iy >= static_cast<long long>(H)) continue;
              for (std::size_t x = 0; x < OW; ++x) {
                const long long ix = static_cast<long long>(x * s.stride + kx) -
                                     static_cast<long long>(s.padding);
                if (ix < 0 || ix >= static_cast<long long>(W)) continue;
                op[y * OW + x] += wv * ip[iy * static_cast<long long>(W) + ix];
              }
            }
          }
        }
      }
    }
    return out;
  }

  Tensor do_backward(const Tensor& up) override {
    const auto& s = spec_;
    const auto& in = input_;
    const std::size_t C = s.in_channels, H = in.shape()[1], W = in.shape()[2];
    const std::size_t O = s.out_channels, OH = output_shape_[1], OW = output_shape_[2];
    const std::size_t K = s.kernel;
    const auto& w = params_[0];
    auto& dw = grads_[0];
    auto& db = grads_[1];
    Tensor din(in.shape());
    for (std::size_t o = 0; o < O; ++o) {
      const double* up_o = &up[o * OH * OW];
      for (std::size_t i = 0; i < OH * OW; ++i) db[o] += up_o[i];
      for (std::size_t c = 0; c < C; ++c) {
        const double* ip = &in[c * H * W];
        double* dp = &din[c * H * W];
        for (std::size_t ky = 0; ky < K; ++ky) {
          for (std::size_t kx = 0; kx < K; ++kx) {
            const std::size_t widx = ((o * C + c) * K + ky) * K + kx;
            const double wv = w[widx];
            double acc = 0.0;
            for (std::size_t y = 0; y < OH; ++y) {
              const long long iy = static_cast<long long>(y * s.stride + ky) -
                                   static_cast<long long>(s.padding);
              if (iy < 0 || iy >= static_cast<long long>(H)) continue;
              for (std::size_t x = 0; x < OW; ++x) {
                const long long ix = static_cast<long long>(x * s.stride + kx) -
                                     static_cast<long long>(s.padding);
                if (ix < 0 || ix >= static_cast<long long>(W)) continue;
                const long long at = iy * static_cast<long long>(W) + ix;
                const double g = up_o[y * OW + x];
                acc += g * ip[at];
                dp[at] += g * wv;
              }
            }
            dw[widx] += acc;
          }
        }
      }
    }
    return din;
  }
};

class TConv2d final : public Layer {
 public:
  TConv2d(const LayerSpec& spec, std::mt19937_64& rng) : Layer(spec) {
    check_conv_hyper(spec);
    const double bound =
        std::sqrt(1.0 / static_cast<double>(spec.out_channels * spec.kernel * spec.kernel));
    add_parameter(uniform({spec.in_channels, spec.out_channels, spec.kernel, spec.kernel},
                          bound, rng));
    add_parameter(uniform({spec.out_channels}, bound, rng));
  }

 protected:
  Tensor do_forward(const Tensor& in) override {
    const auto& s = spec_;
    const std::size_t C = s.in_channels, H = in.shape()[1], W = in.shape()[2];
    const std::size_t O = s.out_channels, OH = output_shape_[1], OW = output_shape_[2];
    const std::size_t K = s.kernel;
    const auto& w = params_[0];
    const auto& b = params_[1];
    Tensor out(output_shape_);
    for (std::size_t o = 0; o < O; ++o) {
      double* op = &out[o * OH * OW];
      for (std::size_t i = 0; i < OH * OW; ++i) op[i] = b[o];
      for (std::size_t c = 0; c < C; ++c) {
        const double* ip = &in[c * H * W];
        for (std::size_t ky = 0; ky < K; ++ky) {
          for (std::size_t kx = 0; kx < K; ++kx) {
            const double wv = w[((c * O + o) * K + ky) * K + kx];
            for (std::size_t y = 0; y < H; ++y) {
              const long long oy = static_cast<long long>(y * s.stride + ky) -
                                   static_cast<long long>(s.padding);
              if (oy < 0 || oy >= static_cast<long long>(OH)) continue;
              for (std::size_t x = 0; x < W; ++x) {
                const long long ox = static_cast<long long>(x * s.stride + kx) -
                                     static_cast<long long>(s.padding);
                if (ox < 0 || ox >= static_cast<long long>(OW)) continue;
                op[oy * static_cast<long long>(OW) + ox] += wv * ip[y * W + x];
              }
            }
          }
        }
      }
    }
    return out;
  }

  Tensor do_backward(const Tensor& up) override {
    const auto& s = spec_;
    const auto& in = input_;
    const std::size_t C = s.in_channels, H = in.shape()[1], W = in.shape()[2];
    const std::size_t O = s.out_channels, OH = output_shape_[1], OW = output_shape_[2];
    const std::size_t K = s.kernel;
    const auto& w = params_[0];
    auto& dw = grads_[0];
    auto& db = grads_[1];
    Tensor din(in.shape());
    for (std::size_t o = 0; o < O; ++o) {
      const double* up_o = &up[o * OH * OW];
      for (std::size_t i = 0; i < OH * OW; ++i) db[o] += up_o[i];
      for (std::size_t c = 0; c < C; ++c) {
        const double* ip = &in[c * H * W];
        double* dp = &din[c * H * W];
        for (std::size_t ky = 0; ky < K; ++ky) {
          for (std::size_t kx = 0; kx < K; ++kx) {
            const std::size_t widx = ((c * O + o) * K + ky) * K + kx;
            const double wv = w[widx];
            double acc = 0.0;
            for (std::size_t y = 0; y < H; ++y) {
              const long long oy = static_cast<long long>(y * s.stride + ky) -
                                   static_cast<long long>(s.padding);
              if (oy < 0 || oy >= static_cast<long long>(OH)) continue;
              for (std::size_t x = 0; x < W; ++x) {
                const long long ox = static_cast<long long>(x * s.stride + kx) -
                                     static_cast<long long>(s.padding);
                if (ox < 0 || ox >= static_cast<long long>(OW)) continue;
                const double g = up_o[oy * static_cast<long long>(OW) + ox];
                acc += g * ip[y * W + x];
                dp[y * W + x] += g * wv;
              }
            }
            dw[widx] += acc;
          }
        }
      }
    }
    return din;
  }
};

class Dense final : public Layer {
 public:
  Dense(const LayerSpec& spec, std::mt19937_64& rng) : Layer(spec) {
    if (spec.in_features < 1 || spec.out_features < 1) {
      throw ConfigError("dense layer needs in/out features >= 1");
    }
    const double bound = std::sqrt(1.0 / static_cast<double>(spec.in_features));
    add_parameter(uniform({spec.out_features, spec.in_features}, bound, rng));
    add_parameter(uniform({spec.out_features}, bound, rng));
  }

 protected:
  Tensor do_forward(const Tensor& in) override {
    const std::size_t I = spec_.in_features, O = spec_.out_features;
    const auto& w = params_[0];
    const auto& b = params_[1];
    Tensor out({O});
    for (std::size_t o = 0; o < O; ++o) {
      double acc = b[o];
      for (std::size_t i = 0; i < I; ++i) acc += w[o * I + i] * in[i];
      out[o] = acc;
    }
    return out;
  }

  Tensor do_backward(const Tensor& up) override {
    const std::size_t I = spec_.in_features, O = spec_.out_features;
    const auto& w = params_[0];
    auto& dw = grads_[0];
    auto& db = grads_[1];
    Tensor din({I});
    for (std::size_t o = 0; o < O; ++o) {
      db[o] += up[o];
      for (std::size_t i = 0; i < I; ++i) {
        dw[o * I + i] += up[o] * input_[i];
        din[i] += up[o] * w[o * I + i];
      }
    }
    return din;
  }
};

class LeakyRelu final : public Layer {
 public:
  using Layer::Layer;

 protected:
  Tensor do_forward(const Tensor& in) override {
    Tensor out = in;
    for (auto& v : out.data()) v = v > 0.0 ? v : spec_.negative_slope * v;
    return out;
  }
  Tensor do_backward(const Tensor& up) override {
    Tensor din = up;
    for (std::size_t i = 0; i < din.size(); ++i) {
      if (!(input_[i] > 0.0)) din[i] *= spec_.negative_slope;
    }
    return din;
  }
};

class Sigmoid final : public Layer {
 public:
  using Layer::Layer;

 protected:
  Tensor do_forward(const Tensor& in) override {
    out_ = in;
    for (auto& v : out_.data()) v = 1.0 / (1.0 + std::exp(-v));
    return out_;
  }
  Tensor do_backward(const Tensor& up) override {
    Tensor din = up;
    for (std::size_t i = 0; i < din.size(); ++i) din[i] *= out_[i] * (1.0 - out_[i]);
    return din;
  }

 private:
  Tensor out_;
};

class Reshape final : public Layer {
 public:
  using Layer::Layer;

 protected:
  Tensor do_forward(const Tensor& in) override { return in.reshaped(output_shape_); }
  Tensor do_backward(const Tensor& up) override { return up.reshaped(input_.shape()); }
};

}  // namespace

std::unique_ptr<Layer> make_layer(const LayerSpec& spec, std::mt19937_64& rng) {
  switch (spec.kind) {
    case LayerKind::Conv2d: return std::make_unique<Conv2d>(spec, rng);
    case LayerKind::TConv2d: return std::make_unique<TConv2d>(spec, rng);
    case LayerKind::Dense: return std::make_unique<Dense>(spec, rng);
    case LayerKind::LeakyRelu: return std::make_unique<LeakyRelu>(spec);
    case LayerKind::Sigmoid: return std::make_unique<Sigmoid>(spec);
    case LayerKind::Flatten:
    case LayerKind::Reshape: return std::make_unique<Reshape>(spec);
  }
  throw ConfigError("unknown layer kind");
}

Sequential::Sequential(const std::vector<LayerSpec>& specs, Shape input_shape,
                       std::mt19937_64& rng)
    : input_shape_(std::move(input_shape)) {
  Shape current = input_shape_;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    try {
      current = infer_output_shape(specs[i], current);
    } catch (const UsageError& e) {
      throw ConfigError("layer " + std::to_string(i) + " does not compose: " + e.what());
    }
    layers_.push_back(make_layer(specs[i], rng));
  }
  output_shape_ = current;
}

Tensor Sequential::forward(const Tensor& input) {
  input.check_finite("sequential input");
  Tensor x = input;
  for (auto& layer : layers_) {
    x = layer->forward(x);
    x.check_finite(to_string(layer->spec().kind) + " output");
  }
  return x;
}

Tensor Sequential::backward(const Tensor& upstream) {
  Tensor g = upstream;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) g = (*it)->backward(g);
  return g;
}

std::vector<Tensor*> Sequential::parameters() {
  std::vector<Tensor*> out;
  for (auto& layer : layers_) {
    for (auto& p : layer->parameters()) out.push_back(&p);
  }
  return out;
}

std::vector<Tensor*> Sequential::gradients() {
  std::vector<Tensor*> out;
  for (auto& layer : layers_) {
    for (auto& g : layer->gradients()) out.push_back(&g);
  }
  return out;
}

void Sequential::zero_grad() {
  for (auto& layer : layers_) layer->zero_grad();
}

}  // namespace qcae::nn
