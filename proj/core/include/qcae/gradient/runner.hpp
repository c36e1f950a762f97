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

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "qcae/quantum/gate.hpp"
#include "qcae/quantum/noise.hpp"

namespace qcae::gradient {

/// Executes circuits from |0>^n and reports per-qubit <Z>. Counts every
/// execution, which lets tests audit how many circuits a gradient costs.
///
/// Each execution owns a private StateVector, so one runner can serve
/// concurrent callers. With a noisy channel every execution reseeds its
/// error stream from `noise_seed`, so shifted circuits share one error
/// realization and results stay deterministic.
class CircuitRunner {
 public:
  explicit CircuitRunner(std::size_t n_qubits, quantum::NoiseChannel noise = {},
                         std::uint64_t noise_seed = 0);

  CircuitRunner(const CircuitRunner&) = delete;
  CircuitRunner& operator=(const CircuitRunner&) = delete;

  std::vector<double> run(std::span<const quantum::GateOp> prelude,
                          std::span<const quantum::GateOp> body) const;
  std::vector<double> run(std::span<const quantum::GateOp> body) const { return run({}, body); }

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const quantum::NoiseChannel& noise() const noexcept { return noise_; }
  std::size_t executions() const noexcept { return executions_.load(); }
  void reset_count() noexcept { executions_.store(0); }

 private:
  std::size_t n_qubits_;
  quantum::NoiseChannel noise_;
  std::uint64_t noise_seed_;
  mutable std::atomic<std::size_t> executions_{0};
};

}  // namespace qcae::gradient
