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

#include "qcae/model/model_spec.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "qcae/errors.hpp"

namespace qcae::model {

using nn::LayerSpec;

std::string to_string(ModelKind kind) { return kind == ModelKind::Ccae ? "ccae" : "qcae"; }

ModelKind parse_model_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "ccae") return ModelKind::Ccae;
  if (t == "qcae") return ModelKind::Qcae;
  throw ConfigError("unknown model kind '" + std::string(text) + "' (expected ccae|qcae)");
}

std::vector<LayerSpec> mnist_encoder(std::size_t out_width) {
  return {
      LayerSpec::conv2d(1, 16, 3, 2, 1),  LayerSpec::leaky_relu(0.01),
      LayerSpec::conv2d(16, 32, 3, 2, 1), LayerSpec::leaky_relu(0.01),
      LayerSpec::conv2d(32, 64, 7, 1, 0), LayerSpec::flatten(),
      LayerSpec::dense(64, out_width),
  };
}

std::vector<LayerSpec> mnist_decoder(std::size_t in_width) {
  return {
      LayerSpec::dense(in_width, 64),
      LayerSpec::reshape({64, 1, 1}),
      LayerSpec::tconv2d(64, 32, 7, 1, 0),
      LayerSpec::leaky_relu(0.01),
      LayerSpec::tconv2d(32, 16, 3, 2, 1, 1),
      LayerSpec::leaky_relu(0.01),
      LayerSpec::tconv2d(16, 1, 3, 2, 1, 1),
      LayerSpec::sigmoid(),
  };
}

std::size_t ModelSpec::encoder_width() const {
  return kind == ModelKind::Ccae ? latent_width : ansatz::slot_count(family, n_qubits, layers);
}

std::size_t ModelSpec::decoder_width() const {
  return kind == ModelKind::Ccae ? latent_width : n_qubits;
}

void ModelSpec::validate() const {
  if (kind == ModelKind::Qcae) {
    if (n_qubits < 1 || n_qubits > quantum::kMaxQubits) {
      throw ConfigError("qubits must be in [1, 14], got " + std::to_string(n_qubits));
    }
    if (layers < 1) throw ConfigError("p must be >= 1, got " + std::to_string(layers));
    noise.validate();
  } else if (latent_width < 1) {
    throw ConfigError("latent width must be >= 1");
  }
  // Shape composition; initialization values are irrelevant here.
  std::mt19937_64 rng(0);
  nn::Sequential enc(encoder, input_shape, rng);
  if (enc.output_shape() != nn::Shape{encoder_width()}) {
    throw ConfigError("encoder output " + nn::shape_to_string(enc.output_shape()) +
                      " must be [" + std::to_string(encoder_width()) + "] for this " +
                      to_string(kind) + " latent");
  }
  nn::Sequential dec(decoder, {decoder_width()}, rng);
  if (dec.output_shape() != input_shape) {
    throw ConfigError("decoder output " + nn::shape_to_string(dec.output_shape()) +
                      " must match input " + nn::shape_to_string(input_shape));
  }
}

ModelSpec ModelSpec::mnist_qcae(std::size_t n_qubits, std::size_t layers, ansatz::Family family,
                                bool psr_enabled, ansatz::CostModel cost) {
  ModelSpec s;
  s.kind = ModelKind::Qcae;
  s.n_qubits = n_qubits;
  s.layers = layers;
  s.family = family;
  s.cost = cost;
  s.psr_enabled = psr_enabled;
  s.encoder = mnist_encoder(ansatz::slot_count(family, n_qubits, layers));
  s.decoder = mnist_decoder(n_qubits);
  return s;
}

ModelSpec ModelSpec::mnist_ccae(std::size_t latent_width) {
  ModelSpec s;
  s.kind = ModelKind::Ccae;
  s.latent_width = latent_width;
  s.encoder = mnist_encoder(latent_width);
  s.decoder = mnist_decoder(latent_width);
  return s;
}

ModelSpec ModelSpec::toy_qcae(std::size_t n_qubits, std::size_t layers, ansatz::Family family,
                              ansatz::CostModel cost) {
  ModelSpec s;
  s.kind = ModelKind::Qcae;
  s.input_shape = {1, 8, 8};
  s.n_qubits = n_qubits;
  s.layers = layers;
  s.family = family;
  s.cost = cost;
  s.psr_enabled = true;
  s.encoder = {
      LayerSpec::conv2d(1, 2, 3, 2, 1), LayerSpec::leaky_relu(0.01),
      LayerSpec::conv2d(2, 4, 4, 1, 0), LayerSpec::flatten(),
      LayerSpec::dense(4, ansatz::slot_count(family, n_qubits, layers)),
  };
  s.decoder = {
      LayerSpec::dense(n_qubits, 4),       LayerSpec::reshape({4, 1, 1}),
      LayerSpec::tconv2d(4, 2, 4, 1, 0),   LayerSpec::leaky_relu(0.01),
      LayerSpec::tconv2d(2, 1, 3, 2, 1, 1), LayerSpec::sigmoid(),
  };
  return s;
}

}  // namespace qcae::model
