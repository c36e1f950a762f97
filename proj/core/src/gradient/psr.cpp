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

#include "qcae/gradient/psr.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qcae/errors.hpp"

namespace qcae::gradient {

using quantum::GateOp;

namespace {

ShiftEvaluation evaluate_shift(const ansatz::CircuitTemplate& tpl,
                               const std::vector<GateOp>& bound, std::size_t gate_index,
                               std::span<const GateOp> prelude, const CircuitRunner& runner) {
  const auto& tg = tpl.gates()[gate_index];
  if (!quantum::is_rotation(tg.kind)) {
    throw std::logic_error("parameter shift requested on non-rotation gate " +
                           quantum::to_string(tg.kind));
  }
  constexpr double shift = std::numbers::pi / 2.0;

  ShiftEvaluation ev;
  ev.parameter_index = *tg.slot;
  ev.gate_index = gate_index;
  ev.coefficient = tg.coefficient;

  std::vector<GateOp> shifted = bound;
  shifted[gate_index].angle = bound[gate_index].angle + shift;
  ev.f_plus = runner.run(prelude, shifted);
  shifted[gate_index].angle = bound[gate_index].angle - shift;
  ev.f_minus = runner.run(prelude, shifted);

  ev.gradient.resize(ev.f_plus.size());
  for (std::size_t q = 0; q < ev.f_plus.size(); ++q) {
    ev.gradient[q] = 0.5 * (ev.f_plus[q] - ev.f_minus[q]);
  }
  return ev;
}

}  // namespace

PsrResult psr_gradient(const ansatz::CircuitTemplate& tpl, std::span<const double> params,
                       std::span<const GateOp> prelude, const CircuitRunner& runner,
                       const PsrOptions& options) {
  if (runner.n_qubits() != tpl.n_qubits()) {
    throw UsageError("runner has " + std::to_string(runner.n_qubits()) +
                     " qubits but template has " + std::to_string(tpl.n_qubits()));
  }
  const std::vector<GateOp> bound = tpl.bind(params);

  std::vector<std::size_t> shifted_gates;
  for (std::size_t g = 0; g < tpl.gates().size(); ++g) {
    if (tpl.gates()[g].slot) shifted_gates.push_back(g);
  }

  PsrResult result;
  result.shifts.resize(shifted_gates.size());

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, shifted_gates.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < shifted_gates.size(); ++i) {
      result.shifts[i] = evaluate_shift(tpl, bound, shifted_gates[i], prelude, runner);
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < shifted_gates.size(); i += workers) {
              result.shifts[i] = evaluate_shift(tpl, bound, shifted_gates[i], prelude, runner);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  result.forward = runner.run(prelude, bound);

  result.jacobian = QuantumJacobian(tpl.n_qubits(), tpl.slot_count());
  for (const auto& ev : result.shifts) {
    for (std::size_t q = 0; q < ev.gradient.size(); ++q) {
      result.jacobian(q, ev.parameter_index) += ev.coefficient * ev.gradient[q];
    }
  }
  return result;
}

std::vector<double> chain_loss_gradient(const QuantumJacobian& jacobian,
                                        std::span<const double> downstream) {
  if (downstream.size() != jacobian.rows) {
    throw UsageError("downstream gradient has " + std::to_string(downstream.size()) +
                     " entries but jacobian has " + std::to_string(jacobian.rows) + " rows");
  }
  std::vector<double> out(jacobian.cols, 0.0);
  for (std::size_t r = 0; r < jacobian.rows; ++r) {
    for (std::size_t c = 0; c < jacobian.cols; ++c) out[c] += downstream[r] * jacobian(r, c);
  }
  return out;
}

}  // namespace qcae::gradient
