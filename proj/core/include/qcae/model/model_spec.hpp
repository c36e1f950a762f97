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
#include <string>
#include <vector>

#include "qcae/ansatz/templates.hpp"
#include "qcae/nn/layers.hpp"
#include "qcae/quantum/noise.hpp"

namespace qcae::model {

enum class ModelKind { Ccae, Qcae };

std::string to_string(ModelKind kind);
/// "ccae" or "qcae", case-insensitive. Throws ConfigError.
ModelKind parse_model_kind(std::string_view text);

/// Architecture of either autoencoder.
///
/// QCAE: the encoder ends in a dense layer whose width is the circuit's slot
/// count (2p for the QAOA family); the decoder starts from the n per-qubit
/// <Z> readouts. CCAE: encoder output = latent_width = decoder input.
struct ModelSpec {
  ModelKind kind = ModelKind::Qcae;
  nn::Shape input_shape = {1, 28, 28};
  std::vector<nn::LayerSpec> encoder;
  std::vector<nn::LayerSpec> decoder;

  std::size_t latent_width = 4;  // CCAE only

  std::size_t n_qubits = 4;
  std::size_t layers = 2;
  ansatz::Family family = ansatz::Family::Ours;
  ansatz::CostModel cost = ansatz::CostModel::RingField;
  bool psr_enabled = true;
  quantum::NoiseChannel noise;
  std::uint64_t noise_seed = 0;
  std::size_t psr_threads = 1;

  std::size_t encoder_width() const;
  std::size_t decoder_width() const;

  /// Throws ConfigError if the latent contract or the layer shapes break.
  void validate() const;

  /// 28x28 geometry: conv(1->16,k3,s2,p1) LReLU conv(16->32,k3,s2,p1) LReLU
  /// conv(32->64,k7) flatten dense(64->width); the decoder mirrors it with
  /// transposed convolutions and ends in a sigmoid.
  static ModelSpec mnist_qcae(std::size_t n_qubits, std::size_t layers, ansatz::Family family,
                              bool psr_enabled,
                              ansatz::CostModel cost = ansatz::CostModel::RingField);
  static ModelSpec mnist_ccae(std::size_t latent_width);

  /// Small 8x8 geometry for gradient checks.
  static ModelSpec toy_qcae(std::size_t n_qubits, std::size_t layers, ansatz::Family family,
                            ansatz::CostModel cost = ansatz::CostModel::RingField);
};

std::vector<nn::LayerSpec> mnist_encoder(std::size_t out_width);
std::vector<nn::LayerSpec> mnist_decoder(std::size_t in_width);

}  // namespace qcae::model
