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

#include "qcae/quantum/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qcae/errors.hpp"

namespace qcae::quantum {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::ZZ: return "ZZ";
  }
  return "?";
}

namespace {

void check_qubit_count(std::size_t n) {
  if (n < 1 || n > kMaxQubits) {
    throw ConfigError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                      std::to_string(n));
  }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = Amplitude{1.0, 0.0};
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t len = amplitudes.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw UsageError("amplitude count must be a power of two >= 2, got " + std::to_string(len));
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(len));
  check_qubit_count(n);
  return StateVector(n, std::move(amplitudes));
}

void StateVector::check_target(std::size_t q) const {
  if (q >= n_qubits_) {
    throw UsageError("qubit index " + std::to_string(q) + " out of range for " +
                     std::to_string(n_qubits_) + "-qubit state");
  }
}

void StateVector::apply_single(std::size_t q, const Amplitude (&m)[2][2]) {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amplitudes_.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const Amplitude a0 = amplitudes_[i0];
      const Amplitude a1 = amplitudes_[i1];
      amplitudes_[i0] = m[0][0] * a0 + m[0][1] * a1;
      amplitudes_[i1] = m[1][0] * a0 + m[1][1] * a1;
    }
  }
}

void StateVector::apply(const GateOp& gate) {
  check_target(gate.first);
  if (is_two_qubit(gate.kind)) {
    check_target(gate.second);
    if (gate.first == gate.second) {
      throw UsageError(to_string(gate.kind) + " targets must be distinct, got qubit " +
                       std::to_string(gate.first) + " twice");
    }
  }

  const double half = 0.5 * gate.angle;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const Amplitude minus_i_s{0.0, -s};

  switch (gate.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      const Amplitude m[2][2] = {{r, r}, {r, -r}};
      apply_single(gate.first, m);
      break;
    }
    case GateKind::RX: {
      const Amplitude m[2][2] = {{c, minus_i_s}, {minus_i_s, c}};
      apply_single(gate.first, m);
      break;
    }
    case GateKind::RY: {
      const Amplitude m[2][2] = {{c, -s}, {s, c}};
      apply_single(gate.first, m);
      break;
    }
    case GateKind::RZ: {
      const Amplitude m[2][2] = {{Amplitude{c, -s}, 0.0}, {0.0, Amplitude{c, s}}};
      apply_single(gate.first, m);
      break;
    }
    case GateKind::CNOT: {
      const std::size_t control = std::size_t{1} << gate.first;
      const std::size_t target = std::size_t{1} << gate.second;
      for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        // Visit each swapped pair once, from its target-bit-0 member.
        if ((i & control) && !(i & target)) {
          std::swap(amplitudes_[i], amplitudes_[i | target]);
        }
      }
      break;
    }
    case GateKind::ZZ: {
      const std::size_t a = std::size_t{1} << gate.first;
      const std::size_t b = std::size_t{1} << gate.second;
      const Amplitude even{c, -s};  // Z(x)Z eigenvalue +1
      const Amplitude odd{c, s};    // eigenvalue -1
      for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const bool parity = ((i & a) != 0) != ((i & b) != 0);
        amplitudes_[i] *= parity ? odd : even;
      }
      break;
    }
  }
}

void StateVector::apply(std::span<const GateOp> gates) {
  for (const auto& g : gates) apply(g);
}

double StateVector::expect_z(std::size_t qubit) const {
  check_target(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  double acc = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    const double p = std::norm(amplitudes_[i]);
    acc += (i & mask) ? -p : p;
  }
  return acc;
}

std::vector<double> StateVector::expect_z_all() const {
  std::vector<double> out(n_qubits_, 0.0);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    const double p = std::norm(amplitudes_[i]);
    for (std::size_t q = 0; q < n_qubits_; ++q) {
      out[q] += ((i >> q) & 1U) ? -p : p;
    }
  }
  return out;
}

double StateVector::sample_expect_z(std::size_t qubit, std::size_t shots,
                                    std::mt19937_64& rng) const {
  check_target(qubit);
  if (shots == 0) throw UsageError("shot count must be >= 1");
  std::vector<double> weights(amplitudes_.size());
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) weights[i] = std::norm(amplitudes_[i]);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  long long sum = 0;
  for (std::size_t s = 0; s < shots; ++s) {
    sum += ((pick(rng) >> qubit) & 1U) ? -1 : 1;
  }
  return static_cast<double>(sum) / static_cast<double>(shots);
}

double StateVector::norm_squared() const noexcept {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return acc;
}

StateVector init_zero(std::size_t n_qubits) { return StateVector(n_qubits); }

StateVector apply_gate(StateVector state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

double expect_z(const StateVector& state, std::size_t qubit) { return state.expect_z(qubit); }

}  // namespace qcae::quantum
