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

#include "qcae/quantum/noise.hpp"

#include <numbers>

#include "qcae/errors.hpp"

namespace qcae::quantum {

void NoiseChannel::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(depolarizing_prob)) {
    throw ConfigError("depolarizing probability must be in [0, 1], got " +
                      std::to_string(depolarizing_prob));
  }
  if (!in_unit(readout_flip_prob)) {
    throw ConfigError("readout flip probability must be in [0, 1], got " +
                      std::to_string(readout_flip_prob));
  }
}

void apply_noise(StateVector& state, const NoiseChannel& channel, const GateOp& preceding,
                 std::mt19937_64& rng) {
  if (channel.depolarizing_prob <= 0.0) return;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> pauli(0, 2);
  const std::size_t targets[2] = {preceding.first, preceding.second};
  for (std::size_t t = 0; t < preceding.arity(); ++t) {
    if (coin(rng) >= channel.depolarizing_prob) continue;
    const std::size_t q = targets[t];
    switch (pauli(rng)) {
      case 0: state.apply(GateOp::rx(q, std::numbers::pi)); break;
      case 1: state.apply(GateOp::ry(q, std::numbers::pi)); break;
      default: state.apply(GateOp::rz(q, std::numbers::pi)); break;
    }
  }
}

double apply_readout(double expectation, const NoiseChannel& channel) noexcept {
  return (1.0 - 2.0 * channel.readout_flip_prob) * expectation;
}

std::vector<double> run_noisy(std::size_t n_qubits, std::span<const GateOp> gates,
                              const NoiseChannel& channel, std::mt19937_64& rng) {
  StateVector state(n_qubits);
  for (const auto& g : gates) {
    state.apply(g);
    apply_noise(state, channel, g, rng);
  }
  auto z = state.expect_z_all();
  for (auto& e : z) e = apply_readout(e, channel);
  return z;
}

}  // namespace qcae::quantum
