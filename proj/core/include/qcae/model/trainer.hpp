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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcae/metrics/run_record.hpp"
#include "qcae/metrics/ssim.hpp"
#include "qcae/model/autoencoder.hpp"
#include "qcae/nn/tensor.hpp"

namespace qcae::model {

struct TrainConfig {
  std::size_t epochs = 50;
  std::size_t batch_size = 4;
  std::uint64_t seed = 7;
  double sigma = 0.5;
  double learning_rate = 1e-3;
  std::size_t sample_limit = 2000;
  metrics::SsimConfig ssim;

  /// Throws ConfigError on epochs/batch_size < 1, sigma < 0 or lr <= 0.
  void validate() const;
};

/// Clean images; the trainer derives the noisy inputs from them.
struct TrainData {
  std::vector<nn::Tensor> train;
  std::vector<nn::Tensor> validation;
};

struct TrainResult {
  std::vector<metrics::RunRecord> records;
  double noisy_val_ssim = 0.0;  // SSIM(noisy input, clean) on the validation set
};

/// Thrown when a batch loss turns non-finite. Carries the epochs completed
/// so far plus a diagnostic record for the failing epoch (train_loss NaN).
class TrainingError : public std::runtime_error {
 public:
  TrainingError(const std::string& what, std::vector<metrics::RunRecord> records)
      : std::runtime_error(what), records_(std::move(records)) {}
  const std::vector<metrics::RunRecord>& records() const noexcept { return records_; }

 private:
  std::vector<metrics::RunRecord> records_;
};

/// Seeds for the noisy copies of the training and validation sets.
std::uint64_t train_noise_seed(std::uint64_t run_seed);
std::uint64_t validation_noise_seed(std::uint64_t run_seed);

/**
 * Mini-batch Adam on MSE(reconstruction, clean image) with noisy images as
 * input. Noisy copies are drawn once per run; batch order is reshuffled
 * each epoch from seed + epoch. Per-sample gradients are summed in sample
 * order and averaged, so results are reproducible for a fixed seed.
 * Each epoch appends a record holding the mean batch loss and the mean
 * validation SSIM of denoised versus clean images.
 */
TrainResult train(Autoencoder& model, const TrainConfig& config, const TrainData& data,
                  const std::string& config_id,
                  const std::function<void(const metrics::RunRecord&)>& on_epoch = {});

/// Mean SSIM between model output on `noisy` and `clean`.
double evaluate_ssim(Autoencoder& model, std::span<const nn::Tensor> noisy,
                     std::span<const nn::Tensor> clean, const metrics::SsimConfig& cfg = {});

}  // namespace qcae::model
