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

#include "qcae/model/autoencoder.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "qcae/ansatz/encoding.hpp"
#include "qcae/errors.hpp"
#include "qcae/nn/optim.hpp"

namespace qcae::model {

namespace {

nn::Sequential build(const std::vector<nn::LayerSpec>& specs, nn::Shape input,
                     std::mt19937_64& rng) {
  return nn::Sequential(specs, std::move(input), rng);
}

}  // namespace

Autoencoder::Autoencoder(ModelSpec spec, std::uint64_t seed) : spec_(std::move(spec)) {
  spec_.validate();
  std::mt19937_64 rng(seed);
  encoder_ = build(spec_.encoder, spec_.input_shape, rng);
  decoder_ = build(spec_.decoder, {spec_.decoder_width()}, rng);
  if (spec_.kind == ModelKind::Qcae) {
    circuit_ = ansatz::CircuitTemplate::make(spec_.family, spec_.n_qubits, spec_.layers,
                                             spec_.cost);
    runner_ = std::make_unique<gradient::CircuitRunner>(spec_.n_qubits, spec_.noise,
                                                        spec_.noise_seed);
  }
}

ForwardTrace Autoencoder::forward(const nn::Tensor& noisy_image) {
  if (noisy_image.shape() != spec_.input_shape) {
    throw UsageError("model expects image shape " + nn::shape_to_string(spec_.input_shape) +
                     ", got " + nn::shape_to_string(noisy_image.shape()));
  }
  ForwardTrace trace;
  trace.pass_id = ++pass_counter_;
  const nn::Tensor y = encoder_.forward(noisy_image);
  trace.latent = y.values();

  if (spec_.kind == ModelKind::Qcae) {
    std::vector<double> squashed(trace.latent.size());
    std::transform(trace.latent.begin(), trace.latent.end(), squashed.begin(),
                   [](double v) { return std::tanh(v); });
    trace.angles = ansatz::normalize_to_angle(squashed, -1.0, 1.0);
    const auto gates = circuit_->bind(trace.angles);
    trace.decoder_input = runner_->run(gates);
  } else {
    trace.decoder_input = trace.latent;
  }

  const std::size_t width = trace.decoder_input.size();
  trace.reconstruction = decoder_.forward(nn::Tensor({width}, trace.decoder_input));
  return trace;
}

BackwardResult Autoencoder::backward(const ForwardTrace& trace, const nn::Tensor& loss_gradient) {
  if (trace.pass_id == 0 || trace.pass_id != pass_counter_) {
    throw UsageError("backward needs the trace of the most recent forward pass");
  }
  BackwardResult out;
  const nn::Tensor g_dec = decoder_.backward(loss_gradient);
  out.decoder_input_gradient = g_dec.values();

  if (spec_.kind == ModelKind::Ccae) {
    out.latent_gradient = out.decoder_input_gradient;
    encoder_.backward(g_dec);
    return out;
  }

  const std::size_t slots = trace.angles.size();
  out.angle_gradient.assign(slots, 0.0);
  out.latent_gradient.assign(slots, 0.0);
  if (!spec_.psr_enabled) return out;

  gradient::PsrOptions options;
  options.threads = spec_.psr_threads;
  const auto psr = gradient::psr_gradient(*circuit_, trace.angles, {}, *runner_, options);
  out.angle_gradient = gradient::chain_loss_gradient(psr.jacobian, out.decoder_input_gradient);
  // angle = pi * (tanh(y) + 1)  =>  d angle / dy = pi * (1 - tanh(y)^2)
  for (std::size_t i = 0; i < slots; ++i) {
    const double t = std::tanh(trace.latent[i]);
    out.latent_gradient[i] = out.angle_gradient[i] * std::numbers::pi * (1.0 - t * t);
  }
  encoder_.backward(nn::Tensor({slots}, out.latent_gradient));
  return out;
}

nn::Tensor Autoencoder::denoise(const nn::Tensor& noisy_image) {
  nn::Tensor out = forward(noisy_image).reconstruction;
  for (auto& v : out.data()) v = std::clamp(v, 0.0, 1.0);
  return out;
}

std::vector<nn::Tensor> Autoencoder::denoise(std::span<const nn::Tensor> noisy_images) {
  std::vector<nn::Tensor> out;
  out.reserve(noisy_images.size());
  for (const auto& img : noisy_images) out.push_back(denoise(img));
  return out;
}

std::vector<nn::Tensor*> Autoencoder::parameters() {
  auto out = encoder_.parameters();
  auto dec = decoder_.parameters();
  out.insert(out.end(), dec.begin(), dec.end());
  return out;
}

std::vector<nn::Tensor*> Autoencoder::gradients() {
  auto out = encoder_.gradients();
  auto dec = decoder_.gradients();
  out.insert(out.end(), dec.begin(), dec.end());
  return out;
}

void Autoencoder::zero_grad() {
  encoder_.zero_grad();
  decoder_.zero_grad();
}

void Autoencoder::save(const std::string& path) {
  const auto params = parameters();
  std::vector<const nn::Tensor*> view(params.begin(), params.end());
  nn::save_weights(path, view);
}

void Autoencoder::load(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("weight file not found: " + path);
  const auto loaded = nn::load_weights(path);
  nn::assign_weights(parameters(), loaded);
}

}  // namespace qcae::model
