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

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "qcae/quantum/gate.hpp"

namespace qcae::quantum {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 14;

/**
 * Dense statevector over n qubits.
 *
 * Little-endian ordering: qubit q is bit q of the amplitude index, so
 * |q1 q0> = |10> is index 2. The register starts in |0...0>.
 */
class StateVector {
 public:
  /// Throws ConfigError unless 1 <= n_qubits <= kMaxQubits.
  explicit StateVector(std::size_t n_qubits);

  /// Takes ownership of explicit amplitudes; length must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// Applies the gate in place. Throws UsageError on invalid targets.
  void apply(const GateOp& gate);
  void apply(std::span<const GateOp> gates);

  /// Exact <Z_q>: sum of |amp|^2 with + where bit q is 0.
  double expect_z(std::size_t qubit) const;
  std::vector<double> expect_z_all() const;

  /// Shot-sampled <Z_q>: draws `shots` basis strings and averages +/-1.
  double sample_expect_z(std::size_t qubit, std::size_t shots, std::mt19937_64& rng) const;

  double norm_squared() const noexcept;
  double probability(std::size_t index) const { return std::norm(amplitudes_.at(index)); }

 private:
  StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes);

  void check_target(std::size_t q) const;
  void apply_single(std::size_t q, const Amplitude (&m)[2][2]);

  std::size_t n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// |0>^{(x)n}.
StateVector init_zero(std::size_t n_qubits);

/// Value-returning form of StateVector::apply.
StateVector apply_gate(StateVector state, const GateOp& gate);

double expect_z(const StateVector& state, std::size_t qubit);

}  // namespace qcae::quantum
