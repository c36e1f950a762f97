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

#include "qcae/ansatz/encoding.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "qcae/errors.hpp"

namespace qcae::ansatz {

using quantum::GateKind;
using quantum::GateOp;

std::vector<GateOp> angle_encode(std::span<const double> values, std::size_t n_qubits,
                                 GateKind rotation) {
  if (values.size() != n_qubits) {
    throw UsageError("angle encoding needs one value per qubit: got " +
                     std::to_string(values.size()) + " values for " + std::to_string(n_qubits) +
                     " qubits");
  }
  if (rotation != GateKind::RX && rotation != GateKind::RY && rotation != GateKind::RZ) {
    throw UsageError("angle encoding rotation must be RX, RY or RZ, got " +
                     quantum::to_string(rotation));
  }
  std::vector<GateOp> gates;
  gates.reserve(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    gates.push_back(GateOp{rotation, q, 0, values[q]});
  }
  return gates;
}

std::vector<double> normalize_to_angle(std::span<const double> raw, double lo, double hi) {
  if (!(hi > lo)) {
    throw ConfigError("normalization range needs hi > lo, got lo=" + std::to_string(lo) +
                      " hi=" + std::to_string(hi));
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> out;
  out.reserve(raw.size());
  for (double x : raw) {
    out.push_back(std::clamp(two_pi * (x - lo) / (hi - lo), 0.0, two_pi));
  }
  return out;
}

}  // namespace qcae::ansatz
