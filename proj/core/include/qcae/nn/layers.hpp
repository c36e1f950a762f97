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

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qcae/nn/tensor.hpp"

namespace qcae::nn {

enum class LayerKind { Conv2d, TConv2d, Dense, LeakyRelu, Sigmoid, Flatten, Reshape };

std::string to_string(LayerKind kind);

/**
 * Layer hyperparameters. Only the fields relevant to `kind` are read.
 *
 * conv2d/tconv2d take [channels, height, width] inputs. conv2d is a
 * zero-padded cross-correlation with weight [out, in, k, k]; tconv2d is its
 * adjoint with weight [in, out, k, k] and output size
 * (H - 1) * stride - 2 * padding + kernel + output_padding.
 */
struct LayerSpec {
  LayerKind kind = LayerKind::Flatten;
  std::size_t in_channels = 0;
  std::size_t out_channels = 0;
  std::size_t kernel = 1;
  std::size_t stride = 1;
  std::size_t padding = 0;
  std::size_t output_padding = 0;
  std::size_t in_features = 0;
  std::size_t out_features = 0;
  double negative_slope = 0.01;
  Shape target_shape;  // reshape only

  static LayerSpec conv2d(std::size_t in, std::size_t out, std::size_t kernel,
                          std::size_t stride = 1, std::size_t padding = 0);
  static LayerSpec tconv2d(std::size_t in, std::size_t out, std::size_t kernel,
                           std::size_t stride = 1, std::size_t padding = 0,
                           std::size_t output_padding = 0);
  static LayerSpec dense(std::size_t in, std::size_t out);
  static LayerSpec leaky_relu(double negative_slope = 0.01);
  static LayerSpec sigmoid();
  static LayerSpec flatten();
  static LayerSpec reshape(Shape target);

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

/// Output shape for `input`; throws UsageError naming both shapes on mismatch.
Shape infer_output_shape(const LayerSpec& spec, const Shape& input);

/**
 * A layer with manual backpropagation.
 *
 * forward() caches what backward() needs; backward() returns the input
 * gradient and accumulates parameter gradients until zero_grad().
 */
class Layer {
 public:
  explicit Layer(LayerSpec spec) : spec_(std::move(spec)) {}
  virtual ~Layer() = default;

  const LayerSpec& spec() const noexcept { return spec_; }

  Tensor forward(const Tensor& input);
  /// Throws UsageError before any forward or on an upstream shape mismatch.
  Tensor backward(const Tensor& upstream);

  std::span<Tensor> parameters() noexcept { return params_; }
  std::span<const Tensor> parameters() const noexcept { return params_; }
  std::span<Tensor> gradients() noexcept { return grads_; }
  std::span<const Tensor> gradients() const noexcept { return grads_; }
  void zero_grad();

 protected:
  virtual Tensor do_forward(const Tensor& input) = 0;
  virtual Tensor do_backward(const Tensor& upstream) = 0;

  void add_parameter(Tensor init);

  LayerSpec spec_;
  std::vector<Tensor> params_;
  std::vector<Tensor> grads_;
  Tensor input_;
  Shape output_shape_;
  bool has_cache_ = false;
};

/// Builds a layer; parameters drawn uniform in +/- sqrt(1 / fan_in).
std::unique_ptr<Layer> make_layer(const LayerSpec& spec, std::mt19937_64& rng);

/// Ordered layer stack with shapes checked at construction.
class Sequential {
 public:
  Sequential() = default;
  /// Throws ConfigError when consecutive layer shapes do not compose.
  Sequential(const std::vector<LayerSpec>& specs, Shape input_shape, std::mt19937_64& rng);

  Tensor forward(const Tensor& input);
  Tensor backward(const Tensor& upstream);

  const Shape& input_shape() const noexcept { return input_shape_; }
  const Shape& output_shape() const noexcept { return output_shape_; }
  std::size_t size() const noexcept { return layers_.size(); }
  Layer& layer(std::size_t i) { return *layers_.at(i); }

  std::vector<Tensor*> parameters();
  std::vector<Tensor*> gradients();
  void zero_grad();

 private:
  std::vector<std::unique_ptr<Layer>> layers_;
  Shape input_shape_;
  Shape output_shape_;
};

}  // namespace qcae::nn
