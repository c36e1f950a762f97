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

#include "qcae/gradient/runner.hpp"

#include <random>

#include "qcae/quantum/state_vector.hpp"

namespace qcae::gradient {

CircuitRunner::CircuitRunner(std::size_t n_qubits, quantum::NoiseChannel noise,
                             std::uint64_t noise_seed)
    : n_qubits_(n_qubits), noise_(noise), noise_seed_(noise_seed) {
  noise_.validate();
  // Fail fast on a bad register size rather than at first execution.
  quantum::StateVector probe(n_qubits_);
}

std::vector<double> CircuitRunner::run(std::span<const quantum::GateOp> prelude,
                                       std::span<const quantum::GateOp> body) const {
  executions_.fetch_add(1);
  quantum::StateVector state(n_qubits_);
  if (noise_.is_noiseless()) {
    state.apply(prelude);
    state.apply(body);
    return state.expect_z_all();
  }
  std::mt19937_64 rng(noise_seed_);
  for (const auto& g : prelude) {
    state.apply(g);
    quantum::apply_noise(state, noise_, g, rng);
  }
  for (const auto& g : body) {
    state.apply(g);
    quantum::apply_noise(state, noise_, g, rng);
  }
  auto z = state.expect_z_all();
  for (auto& e : z) e = quantum::apply_readout(e, noise_);
  return z;
}

}  // namespace qcae::gradient
