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
#include <span>
#include <string>
#include <vector>

#include "qcae/nn/tensor.hpp"

namespace qcae::data {

struct NoiseSpec {
  double sigma = 0.0;  // Gaussian std in pixel units
  std::uint64_t seed = 0;
};

/// clamp(x + sigma * g, 0, 1), g standard normal from a generator seeded
/// with spec.seed. sigma == 0 returns the input unchanged.
nn::Tensor add_gaussian_noise(const nn::Tensor& image, const NoiseSpec& spec);

/// Noises every image; image i uses seed spec.seed + i.
std::vector<nn::Tensor> add_gaussian_noise(std::span<const nn::Tensor> images,
                                           const NoiseSpec& spec);

/// Binary PGM (P5), maxval 255, row-major; pixels rounded from [0, 1].
/// Accepts [1, H, W] or [H, W] tensors. Throws IoError on write failure.
void export_image(const nn::Tensor& image, const std::string& path);
std::vector<std::uint8_t> encode_pgm(const nn::Tensor& image);

/// Reads a P5 file with maxval 255 into a [1, H, W] tensor in [0, 1].
nn::Tensor import_image(const std::string& path);
nn::Tensor decode_pgm(std::span<const std::uint8_t> bytes);

/// Places same-sized images side by side, separated by `gap` black columns.
nn::Tensor montage(std::span<const nn::Tensor> images, std::size_t gap = 2);

}  // namespace qcae::data
