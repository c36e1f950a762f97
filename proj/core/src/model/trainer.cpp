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

#include "qcae/model/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qcae/data/images.hpp"
#include "qcae/errors.hpp"
#include "qcae/nn/optim.hpp"

namespace qcae::model {

void TrainConfig::validate() const {
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (!(sigma >= 0.0)) throw ConfigError("sigma must be >= 0");
  if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be > 0");
}

std::uint64_t train_noise_seed(std::uint64_t run_seed) { return run_seed * 1000003ULL + 17; }
std::uint64_t validation_noise_seed(std::uint64_t run_seed) {
  return run_seed * 1000003ULL + 500009;
}

double evaluate_ssim(Autoencoder& model, std::span<const nn::Tensor> noisy,
                     std::span<const nn::Tensor> clean, const metrics::SsimConfig& cfg) {
  const auto out = model.denoise(noisy);
  return metrics::mean_ssim(out, clean, cfg);
}

TrainResult train(Autoencoder& model, const TrainConfig& config, const TrainData& data,
                  const std::string& config_id,
                  const std::function<void(const metrics::RunRecord&)>& on_epoch) {
  config.validate();
  if (data.train.empty()) throw UsageError("training set is empty");
  if (data.validation.empty()) throw UsageError("validation set is empty");

  const std::size_t count = std::min(config.sample_limit, data.train.size());
  const std::span<const nn::Tensor> clean(data.train.data(), count);
  const auto noisy = data::add_gaussian_noise(clean, {config.sigma, train_noise_seed(config.seed)});
  const auto val_noisy = data::add_gaussian_noise(
      data.validation, {config.sigma, validation_noise_seed(config.seed)});

  TrainResult result;
  result.noisy_val_ssim = metrics::mean_ssim(val_noisy, data.validation, config.ssim);

  auto params = model.parameters();
  auto grads = model.gradients();
  const std::vector<const nn::Tensor*> grad_view(grads.begin(), grads.end());
  nn::Adam adam({config.learning_rate, 0.9, 0.999, 1e-8}, params);

  std::vector<std::size_t> order(count);
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 shuffle_rng(config.seed + epoch);
    std::shuffle(order.begin(), order.end(), shuffle_rng);

    double loss_sum = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < count; start += config.batch_size) {
      const std::size_t stop = std::min(count, start + config.batch_size);
      const double inv = 1.0 / static_cast<double>(stop - start);
      model.zero_grad();
      double batch_loss = 0.0;
      auto fail = [&](const std::string& why) {
        result.records.push_back({config_id, epoch, std::nan(""), 0.0});
        throw TrainingError(why + " at epoch " + std::to_string(epoch) + ", batch " +
                                std::to_string(batches),
                            result.records);
      };
      try {
        for (std::size_t k = start; k < stop; ++k) {
          const std::size_t i = order[k];
          const auto trace = model.forward(noisy[i]);
          auto mse = nn::mse_loss(trace.reconstruction, clean[i]);
          batch_loss += mse.loss;
          for (auto& g : mse.gradient.data()) g *= inv;
          model.backward(trace, mse.gradient);
        }
      } catch (const NumericError& e) {
        fail(e.what());
      }
      batch_loss *= inv;
      if (!std::isfinite(batch_loss)) fail("non-finite loss");
      adam.step(grad_view);
      loss_sum += batch_loss;
      ++batches;
    }

    metrics::RunRecord record;
    record.config_id = config_id;
    record.epoch = epoch;
    record.train_loss = loss_sum / static_cast<double>(batches);
    record.val_ssim = evaluate_ssim(model, val_noisy, data.validation, config.ssim);
    result.records.push_back(record);
    if (on_epoch) on_epoch(record);
  }
  return result;
}

}  // namespace qcae::model
