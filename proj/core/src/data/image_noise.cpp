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
#include <random>

#include "qcae/data/images.hpp"
#include "qcae/errors.hpp"

namespace qcae::data {

nn::Tensor add_gaussian_noise(const nn::Tensor& image, const NoiseSpec& spec) {
  if (spec.sigma < 0.0) throw ConfigError("noise sigma must be >= 0");
  if (spec.sigma == 0.0) return image;
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  nn::Tensor out = image;
  for (auto& v : out.data()) v = std::clamp(v + spec.sigma * gauss(rng), 0.0, 1.0);
  return out;
}

std::vector<nn::Tensor> add_gaussian_noise(std::span<const nn::Tensor> images,
                                           const NoiseSpec& spec) {
  std::vector<nn::Tensor> out;
  out.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    out.push_back(add_gaussian_noise(images[i], NoiseSpec{spec.sigma, spec.seed + i}));
  }
  return out;
}

}  // namespace qcae::data
