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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcae/ansatz/templates.hpp"
#include "qcae/gradient/psr.hpp"
#include "qcae/model/model_spec.hpp"
#include "qcae/nn/layers.hpp"

namespace qcae::model {

/// Intermediates of one forward pass, consumed by backward().
struct ForwardTrace {
  nn::Tensor reconstruction;
  std::vector<double> latent;        // encoder output y
  std::vector<double> angles;        // QCAE: pi * (tanh(y) + 1), in [0, 2 pi]
  std::vector<double> decoder_input; // QCAE: per-qubit <Z>; CCAE: y
  std::uint64_t pass_id = 0;
};

struct BackwardResult {
  std::vector<double> decoder_input_gradient;  // dL / d(decoder input)
  std::vector<double> angle_gradient;          // QCAE: dL / d(circuit parameters)
  std::vector<double> latent_gradient;         // dL / dy
};

/**
 * Convolutional autoencoder with either a dense (CCAE) or a variational
 * circuit (QCAE) latent.
 *
 * QCAE pipeline per sample: encoder -> y -> tanh -> angles in [0, 2 pi] ->
 * bound circuit from |0>^n -> per-qubit <Z> -> decoder. Circuit-parameter
 * gradients come from the parameter-shift rule and are chained into the
 * encoder through the squash derivative. With psr_enabled = false the
 * quantum jacobian is zero, so only the decoder learns.
 */
class Autoencoder {
 public:
  /// Throws ConfigError when the spec is inconsistent.
  Autoencoder(ModelSpec spec, std::uint64_t seed);

  ForwardTrace forward(const nn::Tensor& noisy_image);

  /// Accumulates parameter gradients. `trace` must come from the most
  /// recent forward() on this model; otherwise throws UsageError.
  BackwardResult backward(const ForwardTrace& trace, const nn::Tensor& loss_gradient);

  /// Forward pass with the output clamped to [0, 1].
  nn::Tensor denoise(const nn::Tensor& noisy_image);
  std::vector<nn::Tensor> denoise(std::span<const nn::Tensor> noisy_images);

  std::vector<nn::Tensor*> parameters();
  std::vector<nn::Tensor*> gradients();
  void zero_grad();

  void save(const std::string& path);
  /// Throws UsageError when the file is missing or does not fit the spec.
  void load(const std::string& path);

  const ModelSpec& spec() const noexcept { return spec_; }
  const std::optional<ansatz::CircuitTemplate>& circuit() const noexcept { return circuit_; }
  const gradient::CircuitRunner* runner() const noexcept { return runner_.get(); }
  nn::Sequential& encoder() noexcept { return encoder_; }
  nn::Sequential& decoder() noexcept { return decoder_; }

 private:
  ModelSpec spec_;
  nn::Sequential encoder_;
  nn::Sequential decoder_;
  std::optional<ansatz::CircuitTemplate> circuit_;
  std::unique_ptr<gradient::CircuitRunner> runner_;
  std::uint64_t pass_counter_ = 0;
};

}  // namespace qcae::model
