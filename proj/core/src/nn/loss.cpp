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

#include "qcae/errors.hpp"
#include "qcae/nn/optim.hpp"

namespace qcae::nn {

MseResult mse_loss(const Tensor& prediction, const Tensor& target) {
  if (prediction.shape() != target.shape()) {
    throw UsageError("mse_loss shape mismatch: prediction " +
                     shape_to_string(prediction.shape()) + " vs target " +
                     shape_to_string(target.shape()));
  }
  MseResult out{0.0, Tensor(prediction.shape())};
  const std::size_t n = prediction.size();
  if (n == 0) return out;
  const double scale = 2.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = prediction[i] - target[i];
    out.loss += d * d;
    out.gradient[i] = scale * d;
  }
  out.loss /= static_cast<double>(n);
  return out;
}

}  // namespace qcae::nn
