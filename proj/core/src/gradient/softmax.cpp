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

#include <algorithm>
#include <cmath>

#include "qcae/errors.hpp"
#include "qcae/gradient/psr.hpp"

namespace qcae::gradient {

std::vector<double> softmax(std::span<const double> logits) {
  if (logits.empty()) return {};
  const double shift = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - shift);
    total += out[i];
  }
  for (auto& v : out) v /= total;
  return out;
}

SoftmaxXent softmax_xent(std::span<const double> logits, std::span<const double> target) {
  if (logits.size() != target.size()) {
    throw UsageError("logits and target lengths differ: " + std::to_string(logits.size()) +
                     " vs " + std::to_string(target.size()));
  }
  SoftmaxXent out;
  if (logits.empty()) return out;
  // log softmax_j = logits_j - logsumexp(logits)
  const double shift = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (double l : logits) total += std::exp(l - shift);
  const double log_z = shift + std::log(total);

  const auto prob = softmax(logits);
  out.grad.resize(logits.size());
  for (std::size_t j = 0; j < logits.size(); ++j) {
    if (target[j] != 0.0) out.loss -= target[j] * (logits[j] - log_z);
    out.grad[j] = prob[j] - target[j];
  }
  return out;
}

}  // namespace qcae::gradient
