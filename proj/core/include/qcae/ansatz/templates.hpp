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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcae/quantum/gate.hpp"

namespace qcae::ansatz {

/// Circuit families: the QAOA ansatz and three hardware-efficient layouts.
///   A: per layer RY on every qubit, then CNOT chain q0->q1->...->q(n-1).
///   B: per layer RY then RZ on every qubit, then CNOT chain.
///   C: per layer RY on every qubit, CNOT ring (chain plus q(n-1)->q0), RZ on every qubit.
enum class Family { Ours, A, B, C };

/// Cost Hamiltonian used by the QAOA phase layer.
///   Ring:      H_C = sum over ring edges Z_i Z_j.
///   RingField: Ring plus sum_i h_i Z_i with h_i = (i + 1) / n.
/// The pure ring commutes with global bit flip, which pins every <Z_i> to 0;
/// the field term breaks that symmetry so per-qubit readout carries signal.
enum class CostModel { Ring, RingField };

enum class SlotRole { Gamma, Beta, Rotation };

std::string to_string(Family family);
std::string to_string(CostModel cost);
/// Case-insensitive: "ours"/"qaoa", "a", "b", "c". Throws ConfigError.
Family parse_family(std::string_view text);
/// "ring" or "ring_field". Throws ConfigError.
CostModel parse_cost_model(std::string_view text);

struct ParameterSlot {
  std::size_t index = 0;
  SlotRole role = SlotRole::Rotation;
  quantum::GateKind gate_kind = quantum::GateKind::RY;
  std::vector<std::size_t> targets;
};

/// Gate with either a fixed angle or an angle `coefficient * params[slot]`.
struct TemplateGate {
  quantum::GateKind kind = quantum::GateKind::H;
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<std::size_t> slot;
  double coefficient = 1.0;
  double fixed_angle = 0.0;
};

struct CostHamiltonian {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<double> field;  // empty, or one weight per qubit

  /// Edges (i, i+1 mod n); a single edge for n = 2, none for n = 1.
  static CostHamiltonian ring(std::size_t n_qubits);
  static CostHamiltonian ring_with_field(std::size_t n_qubits);
  static CostHamiltonian make(CostModel model, std::size_t n_qubits);
};

/// Parameters per circuit: Ours 2p, A p*n, B and C 2*p*n.
std::size_t slot_count(Family family, std::size_t n_qubits, std::size_t layers);

/// Immutable symbolic circuit. Safe to share between concurrent evaluations.
class CircuitTemplate {
 public:
  /// Throws ConfigError for n outside [1, 14] or layers < 1.
  static CircuitTemplate make(Family family, std::size_t n_qubits, std::size_t layers,
                              CostModel cost = CostModel::Ring);

  Family family() const noexcept { return family_; }
  CostModel cost_model() const noexcept { return cost_; }
  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t layers() const noexcept { return layers_; }
  std::size_t slot_count() const noexcept { return slots_.size(); }
  std::span<const ParameterSlot> slots() const noexcept { return slots_; }
  std::span<const TemplateGate> gates() const noexcept { return gates_; }
  std::size_t parameterized_gate_count() const noexcept;

  /// Concrete gate list. Throws UsageError unless params.size() == slot_count().
  std::vector<quantum::GateOp> bind(std::span<const double> params) const;

 private:
  CircuitTemplate() = default;

  Family family_ = Family::Ours;
  CostModel cost_ = CostModel::Ring;
  std::size_t n_qubits_ = 0;
  std::size_t layers_ = 0;
  std::vector<ParameterSlot> slots_;
  std::vector<TemplateGate> gates_;
};

/// H on every qubit, then p rounds of [ZZ(2 gamma_k) per cost edge,
/// RZ(2 gamma_k h_i) per field term, RX(2 beta_k) per qubit].
std::vector<quantum::GateOp> build_qaoa(std::size_t n_qubits, std::size_t layers,
                                        std::span<const double> gammas,
                                        std::span<const double> betas,
                                        CostModel cost = CostModel::Ring);

std::vector<quantum::GateOp> build_family(Family family, std::size_t n_qubits,
                                          std::size_t layers, std::span<const double> params,
                                          CostModel cost = CostModel::Ring);

}  // namespace qcae::ansatz
