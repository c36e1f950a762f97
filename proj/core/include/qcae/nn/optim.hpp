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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcae/nn/tensor.hpp"

namespace qcae::nn {

struct MseResult {
  double loss = 0.0;
  Tensor gradient;  // 2 (prediction - target) / N
};

/// Mean squared error. Throws UsageError on shape mismatch.
MseResult mse_loss(const Tensor& prediction, const Tensor& target);

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam with bias-corrected moments; one moment pair per parameter tensor.
class Adam {
 public:
  Adam(AdamConfig config, std::span<Tensor* const> params);

  /// params[i] -= lr * m_hat / (sqrt(v_hat) + eps). Increments step_count.
  void step(std::span<const Tensor* const> grads);

  std::size_t step_count() const noexcept { return step_count_; }
  const AdamConfig& config() const noexcept { return config_; }
  const std::vector<Tensor>& first_moments() const noexcept { return m_; }
  const std::vector<Tensor>& second_moments() const noexcept { return v_; }

 private:
  AdamConfig config_;
  std::vector<Tensor*> params_;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
  std::size_t step_count_ = 0;
};

/// Flat binary weight file:
///   8 bytes magic "QCAEWTS1", u32 tensor count,
///   per tensor: u32 rank, rank x u64 dims,
///   then every tensor's values as little-endian IEEE-754 f64, in order.
void save_weights(const std::string& path, std::span<const Tensor* const> tensors);
std::vector<Tensor> load_weights(const std::string& path);

/// Copies loaded values into `targets`, requiring identical count and shapes.
void assign_weights(std::span<Tensor* const> targets, const std::vector<Tensor>& loaded);

}  // namespace qcae::nn
