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
#include <span>
#include <vector>

#include "qcae/ansatz/templates.hpp"
#include "qcae/gradient/runner.hpp"

namespace qcae::gradient {

/// d<Z_row>/d theta_col, row-major with shape (n_qubits, parameter_count).
struct QuantumJacobian {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> entries;

  QuantumJacobian() = default;
  QuantumJacobian(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// One +/- pi/2 shift pair on a single parameter-bearing gate.
/// `gradient` = (f_plus - f_minus) / 2 is the derivative with respect to
/// that gate's own angle, so every entry lies in [-1, 1].
struct ShiftEvaluation {
  std::size_t parameter_index = 0;
  std::size_t gate_index = 0;
  double coefficient = 1.0;
  std::vector<double> f_plus;
  std::vector<double> f_minus;
  std::vector<double> gradient;
};

struct PsrResult {
  std::vector<double> forward;  // unshifted <Z> per qubit
  QuantumJacobian jacobian;
  std::vector<ShiftEvaluation> shifts;
};

struct PsrOptions {
  /// Shifted circuits are independent; > 1 evaluates them on worker threads.
  /// Results are merged by gate index, so output does not depend on this.
  std::size_t threads = 1;
};

/// Parameter-shift jacobian of the per-qubit <Z> readout.
///
/// A slot may drive several gates (QAOA gamma touches every cost term), so
/// the rule runs per gate occurrence: shift that gate's angle by +/- pi/2,
/// halve the difference, scale by the bind coefficient, and sum into the
/// slot's column. Costs 2 * parameterized_gate_count() + 1 executions.
/// `prelude` runs before the template and is held fixed.
PsrResult psr_gradient(const ansatz::CircuitTemplate& tpl, std::span<const double> params,
                       std::span<const quantum::GateOp> prelude, const CircuitRunner& runner,
                       const PsrOptions& options = {});

/// downstream^T * jacobian: loss gradient with respect to the circuit parameters.
std::vector<double> chain_loss_gradient(const QuantumJacobian& jacobian,
                                        std::span<const double> downstream);

std::vector<double> softmax(std::span<const double> logits);

struct SoftmaxXent {
  double loss = 0.0;
  std::vector<double> grad;  // softmax(logits) - target
};

/// Cross-entropy of softmax(logits) against a probability target.
SoftmaxXent softmax_xent(std::span<const double> logits, std::span<const double> target);

}  // namespace qcae::gradient
