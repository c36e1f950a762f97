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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcae/ansatz/encoding.hpp"
#include "qcae/ansatz/templates.hpp"
#include "qcae/gradient/psr.hpp"
#include "qcae/gradient/runner.hpp"
#include "qcae/model/autoencoder.hpp"
#include "qcae/model/model_spec.hpp"
#include "qcae/nn/layers.hpp"
#include "qcae/nn/optim.hpp"
#include "qcae/quantum/state_vector.hpp"

namespace {

using namespace qcae;

std::vector<double> uniform(std::size_t n, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = d(rng);
  return out;
}

nn::Tensor random_tensor(nn::Shape shape, std::uint64_t seed) {
  const auto n = nn::shape_size(shape);
  return nn::Tensor(std::move(shape), uniform(n, seed, 0.0, 1.0));
}

void BM_RotationLayer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  quantum::StateVector sv(n);
  for (auto _ : state) {
    for (std::size_t q = 0; q < n; ++q) sv.apply(quantum::GateOp::ry(q, 0.3));
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_RotationLayer)->DenseRange(4, 14, 2);

void BM_ZzRing(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  quantum::StateVector sv(n);
  for (auto _ : state) {
    for (std::size_t q = 0; q < n; ++q) sv.apply(quantum::GateOp::zz(q, (q + 1) % n, 0.7));
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ZzRing)->DenseRange(4, 14, 2);

void BM_ExpectZ(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  quantum::StateVector sv(n);
  for (std::size_t q = 0; q < n; ++q) sv.apply(quantum::GateOp::h(q));
  for (auto _ : state) benchmark::DoNotOptimize(sv.expect_z_all());
}
BENCHMARK(BM_ExpectZ)->DenseRange(4, 14, 2);

// args: qubits, layers
void BM_PsrQaoa(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<std::size_t>(state.range(1));
  const auto tpl =
      ansatz::CircuitTemplate::make(ansatz::Family::Ours, n, p, ansatz::CostModel::RingField);
  const auto params = uniform(tpl.slots().size(), 1, -3.0, 3.0);
  const auto prelude = ansatz::angle_encode(uniform(n, 2, 0.0, 6.28), n);
  gradient::CircuitRunner runner(n);
  for (auto _ : state) benchmark::DoNotOptimize(gradient::psr_gradient(tpl, params, prelude, runner));
  state.counters["circuits"] = static_cast<double>(runner.executions()) /
                               static_cast<double>(state.iterations());
}
BENCHMARK(BM_PsrQaoa)->ArgsProduct({{4, 8}, {1, 2, 4}})->Unit(benchmark::kMicrosecond);

void BM_PsrFamily(benchmark::State& state) {
  const auto family = static_cast<ansatz::Family>(state.range(0));
  const std::size_t n = 4, p = 2;
  const auto tpl = ansatz::CircuitTemplate::make(family, n, p);
  const auto params = uniform(tpl.slots().size(), 3, -3.0, 3.0);
  gradient::CircuitRunner runner(n);
  for (auto _ : state) benchmark::DoNotOptimize(gradient::psr_gradient(tpl, params, {}, runner));
}
BENCHMARK(BM_PsrFamily)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

// args: in channels, out channels, kernel, stride, padding, spatial size
void BM_Conv2dForwardBackward(benchmark::State& state) {
  const auto in = static_cast<std::size_t>(state.range(0));
  const auto out = static_cast<std::size_t>(state.range(1));
  const auto size = static_cast<std::size_t>(state.range(5));
  std::mt19937_64 rng(5);
  auto layer = nn::make_layer(
      nn::LayerSpec::conv2d(in, out, static_cast<std::size_t>(state.range(2)),
                            static_cast<std::size_t>(state.range(3)),
                            static_cast<std::size_t>(state.range(4))),
      rng);
  const auto x = random_tensor({in, size, size}, 6);
  for (auto _ : state) {
    auto y = layer->forward(x);
    benchmark::DoNotOptimize(layer->backward(y));
  }
}
BENCHMARK(BM_Conv2dForwardBackward)
    ->Args({1, 16, 3, 2, 1, 28})
    ->Args({16, 32, 3, 2, 1, 14})
    ->Args({32, 64, 7, 1, 0, 7})
    ->Unit(benchmark::kMicrosecond);

// args: in channels, out channels, kernel, stride, padding, output padding, spatial size
void BM_Tconv2dForwardBackward(benchmark::State& state) {
  const auto in = static_cast<std::size_t>(state.range(0));
  const auto size = static_cast<std::size_t>(state.range(6));
  std::mt19937_64 rng(7);
  auto layer = nn::make_layer(
      nn::LayerSpec::tconv2d(in, static_cast<std::size_t>(state.range(1)),
                             static_cast<std::size_t>(state.range(2)),
                             static_cast<std::size_t>(state.range(3)),
                             static_cast<std::size_t>(state.range(4)),
                             static_cast<std::size_t>(state.range(5))),
      rng);
  const auto x = random_tensor({in, size, size}, 8);
  for (auto _ : state) {
    auto y = layer->forward(x);
    benchmark::DoNotOptimize(layer->backward(y));
  }
}
BENCHMARK(BM_Tconv2dForwardBackward)
    ->Args({64, 32, 7, 1, 0, 0, 1})
    ->Args({32, 16, 3, 2, 1, 1, 7})
    ->Args({16, 1, 3, 2, 1, 1, 14})
    ->Unit(benchmark::kMicrosecond);

// One sample through forward, MSE and backward. arg 0: psr off/on, -1 for the classical model.
void BM_TrainStep(benchmark::State& state) {
  const auto mode = state.range(0);
  const auto spec = mode < 0 ? model::ModelSpec::mnist_ccae(4)
                             : model::ModelSpec::mnist_qcae(4, 2, ansatz::Family::Ours, mode == 1);
  model::Autoencoder m(spec, 11);
  const auto clean = random_tensor({1, 28, 28}, 12);
  const auto noisy = random_tensor({1, 28, 28}, 13);
  for (auto _ : state) {
    m.zero_grad();
    const auto trace = m.forward(noisy);
    const auto mse = nn::mse_loss(trace.reconstruction, clean);
    benchmark::DoNotOptimize(m.backward(trace, mse.gradient));
  }
}
BENCHMARK(BM_TrainStep)->Arg(-1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
