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
#include <random>
#include <span>
#include <vector>

#include "qcae/quantum/gate.hpp"
#include "qcae/quantum/state_vector.hpp"

namespace qcae::quantum {

/// Minimal parametric noise: per-gate random Pauli errors and symmetric
/// readout flips. The default (0, 0) is the noiseless simulator.
struct NoiseChannel {
  double depolarizing_prob = 0.0;
  double readout_flip_prob = 0.0;

  /// Throws ConfigError unless both probabilities are in [0, 1].
  void validate() const;
  bool is_noiseless() const noexcept {
    return depolarizing_prob == 0.0 && readout_flip_prob == 0.0;
  }

  friend bool operator==(const NoiseChannel&, const NoiseChannel&) = default;
};

/// Error step following `preceding`: with probability depolarizing_prob per
/// target qubit, applies X, Y or Z (as a pi rotation) chosen uniformly.
/// The rng is not consumed when depolarizing_prob is 0.
void apply_noise(StateVector& state, const NoiseChannel& channel, const GateOp& preceding,
                 std::mt19937_64& rng);

/// Readout attenuation of an exact expectation: (1 - 2 q) e.
double apply_readout(double expectation, const NoiseChannel& channel) noexcept;

/// Runs `gates` on |0>^n with the channel's gate errors interleaved and
/// returns readout-attenuated per-qubit <Z>.
std::vector<double> run_noisy(std::size_t n_qubits, std::span<const GateOp> gates,
                              const NoiseChannel& channel, std::mt19937_64& rng);

}  // namespace qcae::quantum
