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

#include <span>
#include <vector>

#include "qcae/nn/tensor.hpp"

namespace qcae::metrics {

enum class SsimWindow { Uniform8, Gaussian11 };

struct SsimConfig {
  SsimWindow window = SsimWindow::Gaussian11;
  double gaussian_sigma = 1.5;
  double dynamic_range = 1.0;

  double c1() const noexcept { return (0.01 * dynamic_range) * (0.01 * dynamic_range); }
  double c2() const noexcept { return (0.03 * dynamic_range) * (0.03 * dynamic_range); }
  std::size_t window_size() const noexcept { return window == SsimWindow::Uniform8 ? 8 : 11; }
  /// Row-major window weights, summing to 1.
  std::vector<double> weights() const;
};

/// Structural similarity of two single-channel images ([1, H, W] or [H, W]),
/// averaged over every window position that fits inside the image.
/// Throws UsageError on shape mismatch or an image smaller than the window.
double ssim(const nn::Tensor& a, const nn::Tensor& b, const SsimConfig& cfg = {});

/// Mean of per-pair SSIM.
double mean_ssim(std::span<const nn::Tensor> a, std::span<const nn::Tensor> b,
                 const SsimConfig& cfg = {});

}  // namespace qcae::metrics
