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

#include "qcae/metrics/ssim.hpp"

#include <cmath>

#include "qcae/errors.hpp"

namespace qcae::metrics {

std::vector<double> SsimConfig::weights() const {
  const std::size_t k = window_size();
  std::vector<double> w(k * k);
  if (window == SsimWindow::Uniform8) {
    std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(k * k));
    return w;
  }
  const double center = static_cast<double>(k - 1) / 2.0;
  std::vector<double> g(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double d = static_cast<double>(i) - center;
    g[i] = std::exp(-d * d / (2.0 * gaussian_sigma * gaussian_sigma));
    total += g[i];
  }
  for (auto& v : g) v /= total;
  for (std::size_t y = 0; y < k; ++y) {
    for (std::size_t x = 0; x < k; ++x) w[y * k + x] = g[y] * g[x];
  }
  return w;
}

namespace {

std::pair<std::size_t, std::size_t> dims(const nn::Tensor& t) {
  const auto& s = t.shape();
  if (s.size() == 3 && s[0] == 1) return {s[1], s[2]};
  if (s.size() == 2) return {s[0], s[1]};
  throw UsageError("ssim expects a [1, H, W] or [H, W] image, got " + nn::shape_to_string(s));
}

}  // namespace

double ssim(const nn::Tensor& a, const nn::Tensor& b, const SsimConfig& cfg) {
  if (a.shape() != b.shape()) {
    throw UsageError("ssim shape mismatch: " + nn::shape_to_string(a.shape()) + " vs " +
                     nn::shape_to_string(b.shape()));
  }
  const auto [h, w] = dims(a);
  const std::size_t k = cfg.window_size();
  if (h < k || w < k) {
    throw UsageError("image " + nn::shape_to_string(a.shape()) + " is smaller than the " +
                     std::to_string(k) + "x" + std::to_string(k) + " SSIM window");
  }
  const auto weights = cfg.weights();
  const double c1 = cfg.c1();
  const double c2 = cfg.c2();

  double total = 0.0;
  std::size_t windows = 0;
  for (std::size_t y0 = 0; y0 + k <= h; ++y0) {
    for (std::size_t x0 = 0; x0 + k <= w; ++x0) {
      double mu_a = 0.0, mu_b = 0.0;
      for (std::size_t y = 0; y < k; ++y) {
        for (std::size_t x = 0; x < k; ++x) {
          const double wt = weights[y * k + x];
          const std::size_t at = (y0 + y) * w + x0 + x;
          mu_a += wt * a[at];
          mu_b += wt * b[at];
        }
      }
      double var_a = 0.0, var_b = 0.0, cov = 0.0;
      for (std::size_t y = 0; y < k; ++y) {
        for (std::size_t x = 0; x < k; ++x) {
          const double wt = weights[y * k + x];
          const std::size_t at = (y0 + y) * w + x0 + x;
          const double da = a[at] - mu_a;
          const double db = b[at] - mu_b;
          var_a += wt * da * da;
          var_b += wt * db * db;
          cov += wt * da * db;
        }
      }
      total += ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
               ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

double mean_ssim(std::span<const nn::Tensor> a, std::span<const nn::Tensor> b,
                 const SsimConfig& cfg) {
  if (a.size() != b.size()) {
    throw UsageError("mean_ssim needs equal-length image lists, got " +
                     std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  if (a.empty()) throw UsageError("mean_ssim needs at least one image pair");
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += ssim(a[i], b[i], cfg);
  return total / static_cast<double>(a.size());
}

}  // namespace qcae::metrics
