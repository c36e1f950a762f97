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

#include "qcae/ansatz/templates.hpp"

#include <algorithm>
#include <cctype>

#include "qcae/errors.hpp"
#include "qcae/quantum/state_vector.hpp"

namespace qcae::ansatz {

using quantum::GateKind;
using quantum::GateOp;

std::string to_string(Family family) {
  switch (family) {
    case Family::Ours: return "ours";
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
  }
  return "?";
}

std::string to_string(CostModel cost) {
  return cost == CostModel::Ring ? "ring" : "ring_field";
}

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void check_shape(std::size_t n_qubits, std::size_t layers) {
  if (n_qubits < 1 || n_qubits > quantum::kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, " + std::to_string(quantum::kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  }
  if (layers < 1) throw ConfigError("p (layers) must be >= 1, got " + std::to_string(layers));
}

TemplateGate fixed(GateKind kind, std::size_t first, std::size_t second = 0) {
  return TemplateGate{kind, first, second, std::nullopt, 1.0, 0.0};
}

TemplateGate slotted(GateKind kind, std::size_t first, std::size_t second, std::size_t slot,
                     double coefficient) {
  return TemplateGate{kind, first, second, slot, coefficient, 0.0};
}

std::vector<std::size_t> all_qubits(std::size_t n) {
  std::vector<std::size_t> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = i;
  return q;
}

}  // namespace

Family parse_family(std::string_view text) {
  const auto t = lower(text);
  if (t == "ours" || t == "qaoa") return Family::Ours;
  if (t == "a") return Family::A;
  if (t == "b") return Family::B;
  if (t == "c") return Family::C;
  throw ConfigError("unknown circuit family '" + std::string(text) + "' (expected a|b|c|ours)");
}

CostModel parse_cost_model(std::string_view text) {
  const auto t = lower(text);
  if (t == "ring") return CostModel::Ring;
  if (t == "ring_field") return CostModel::RingField;
  throw ConfigError("unknown cost model '" + std::string(text) + "' (expected ring|ring_field)");
}

CostHamiltonian CostHamiltonian::ring(std::size_t n_qubits) {
  CostHamiltonian h;
  if (n_qubits == 2) {
    h.edges.emplace_back(0, 1);
  } else if (n_qubits >= 3) {
    for (std::size_t i = 0; i < n_qubits; ++i) h.edges.emplace_back(i, (i + 1) % n_qubits);
  }
  return h;
}

CostHamiltonian CostHamiltonian::ring_with_field(std::size_t n_qubits) {
  auto h = ring(n_qubits);
  h.field.resize(n_qubits);
  for (std::size_t i = 0; i < n_qubits; ++i) {
    h.field[i] = static_cast<double>(i + 1) / static_cast<double>(n_qubits);
  }
  return h;
}

CostHamiltonian CostHamiltonian::make(CostModel model, std::size_t n_qubits) {
  return model == CostModel::Ring ? ring(n_qubits) : ring_with_field(n_qubits);
}

std::size_t slot_count(Family family, std::size_t n_qubits, std::size_t layers) {
  switch (family) {
    case Family::Ours: return 2 * layers;
    case Family::A: return layers * n_qubits;
    case Family::B:
    case Family::C: return 2 * layers * n_qubits;
  }
  return 0;
}

CircuitTemplate CircuitTemplate::make(Family family, std::size_t n_qubits, std::size_t layers,
                                      CostModel cost) {
  check_shape(n_qubits, layers);
  CircuitTemplate t;
  t.family_ = family;
  t.cost_ = cost;
  t.n_qubits_ = n_qubits;
  t.layers_ = layers;
  const std::size_t n = n_qubits;

  auto cnot_chain = [&](bool ring) {
    for (std::size_t q = 0; q + 1 < n; ++q) t.gates_.push_back(fixed(GateKind::CNOT, q, q + 1));
    if (ring && n >= 2) t.gates_.push_back(fixed(GateKind::CNOT, n - 1, 0));
  };
  auto rotation_wall = [&](GateKind kind, std::size_t first_slot) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t slot = first_slot + q;
      t.slots_[slot] = ParameterSlot{slot, SlotRole::Rotation, kind, {q}};
      t.gates_.push_back(slotted(kind, q, 0, slot, 1.0));
    }
  };

  t.slots_.resize(ansatz::slot_count(family, n, layers));

  switch (family) {
    case Family::Ours: {
      const auto h_c = CostHamiltonian::make(cost, n);
      std::vector<std::size_t> cost_targets;
      for (const auto& [a, b] : h_c.edges) {
        cost_targets.push_back(a);
        cost_targets.push_back(b);
      }
      std::sort(cost_targets.begin(), cost_targets.end());
      cost_targets.erase(std::unique(cost_targets.begin(), cost_targets.end()),
                         cost_targets.end());
      if (!h_c.field.empty()) cost_targets = all_qubits(n);
      const GateKind cost_kind = h_c.edges.empty() ? GateKind::RZ : GateKind::ZZ;

      for (std::size_t q = 0; q < n; ++q) t.gates_.push_back(fixed(GateKind::H, q));
      for (std::size_t k = 0; k < layers; ++k) {
        const std::size_t gamma = k;
        const std::size_t beta = layers + k;
        t.slots_[gamma] = ParameterSlot{gamma, SlotRole::Gamma, cost_kind, cost_targets};
        t.slots_[beta] = ParameterSlot{beta, SlotRole::Beta, GateKind::RX, all_qubits(n)};
        // exp(-i gamma Z_a Z_b) = ZZ(2 gamma); exp(-i gamma h Z) = RZ(2 gamma h).
        for (const auto& [a, b] : h_c.edges) {
          t.gates_.push_back(slotted(GateKind::ZZ, a, b, gamma, 2.0));
        }
        for (std::size_t q = 0; q < h_c.field.size(); ++q) {
          t.gates_.push_back(slotted(GateKind::RZ, q, 0, gamma, 2.0 * h_c.field[q]));
        }
        for (std::size_t q = 0; q < n; ++q) {
          t.gates_.push_back(slotted(GateKind::RX, q, 0, beta, 2.0));
        }
      }
      break;
    }
    case Family::A:
      for (std::size_t k = 0; k < layers; ++k) {
        rotation_wall(GateKind::RY, k * n);
        cnot_chain(false);
      }
      break;
    case Family::B:
      for (std::size_t k = 0; k < layers; ++k) {
        rotation_wall(GateKind::RY, 2 * k * n);
        rotation_wall(GateKind::RZ, 2 * k * n + n);
        cnot_chain(false);
      }
      break;
    case Family::C:
      for (std::size_t k = 0; k < layers; ++k) {
        rotation_wall(GateKind::RY, 2 * k * n);
        cnot_chain(true);
        rotation_wall(GateKind::RZ, 2 * k * n + n);
      }
      break;
  }
  return t;
}

std::size_t CircuitTemplate::parameterized_gate_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [](const TemplateGate& g) { return g.slot; }));
}

std::vector<GateOp> CircuitTemplate::bind(std::span<const double> params) const {
  if (params.size() != slots_.size()) {
    throw UsageError("family " + to_string(family_) + " with n=" + std::to_string(n_qubits_) +
                     ", p=" + std::to_string(layers_) + " takes " +
                     std::to_string(slots_.size()) + " parameters, got " +
                     std::to_string(params.size()));
  }
  std::vector<GateOp> out;
  out.reserve(gates_.size());
  for (const auto& g : gates_) {
    const double angle = g.slot ? g.coefficient * params[*g.slot] : g.fixed_angle;
    out.push_back(GateOp{g.kind, g.first, g.second, angle});
  }
  return out;
}

std::vector<GateOp> build_qaoa(std::size_t n_qubits, std::size_t layers,
                               std::span<const double> gammas, std::span<const double> betas,
                               CostModel cost) {
  check_shape(n_qubits, layers);
  if (gammas.size() != layers || betas.size() != layers) {
    throw UsageError("QAOA with p=" + std::to_string(layers) + " needs " +
                     std::to_string(layers) + " gammas and betas, got " +
                     std::to_string(gammas.size()) + " and " + std::to_string(betas.size()));
  }
  std::vector<double> params(gammas.begin(), gammas.end());
  params.insert(params.end(), betas.begin(), betas.end());
  return CircuitTemplate::make(Family::Ours, n_qubits, layers, cost).bind(params);
}

std::vector<GateOp> build_family(Family family, std::size_t n_qubits, std::size_t layers,
                                 std::span<const double> params, CostModel cost) {
  return CircuitTemplate::make(family, n_qubits, layers, cost).bind(params);
}

}  // namespace qcae::ansatz
