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

#include <cmath>

#include "qcae/errors.hpp"
#include "qcae/nn/optim.hpp"

namespace qcae::nn {

Adam::Adam(AdamConfig config, std::span<Tensor* const> params)
    : config_(config), params_(params.begin(), params.end()) {
  if (!(config_.learning_rate > 0.0) || !(config_.beta1 > 0.0 && config_.beta1 < 1.0) ||
      !(config_.beta2 > 0.0 && config_.beta2 < 1.0) || !(config_.epsilon > 0.0)) {
    throw ConfigError("Adam needs lr > 0, beta1/beta2 in (0, 1) and epsilon > 0");
  }
  for (const Tensor* p : params_) {
    m_.push_back(Tensor::zeros(p->shape()));
    v_.push_back(Tensor::zeros(p->shape()));
  }
}

void Adam::step(std::span<const Tensor* const> grads) {
  if (grads.size() != params_.size()) {
    throw UsageError("Adam expects " + std::to_string(params_.size()) +
                     " gradient tensors, got " + std::to_string(grads.size()));
  }
  ++step_count_;
  const double t = static_cast<double>(step_count_);
  const double correct1 = 1.0 - std::pow(config_.beta1, t);
  const double correct2 = 1.0 - std::pow(config_.beta2, t);
  for (std::size_t k = 0; k < params_.size(); ++k) {
    Tensor& p = *params_[k];
    const Tensor& g = *grads[k];
    if (g.shape() != p.shape()) {
      throw UsageError("Adam gradient shape " + shape_to_string(g.shape()) +
                       " does not match parameter " + shape_to_string(p.shape()));
    }
    Tensor& m = m_[k];
    Tensor& v = v_[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      m[i] = config_.beta1 * m[i] + (1.0 - config_.beta1) * g[i];
      v[i] = config_.beta2 * v[i] + (1.0 - config_.beta2) * g[i] * g[i];
      const double m_hat = m[i] / correct1;
      const double v_hat = v[i] / correct2;
      p[i] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
  }
}

}  // namespace qcae::nn
