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

#include <span>
#include <vector>

#include "qcae/quantum/gate.hpp"

namespace qcae::ansatz {

/// One rotation per qubit, qubit i receiving values[i]. Throws UsageError
/// when values.size() != n_qubits or rotation is not RX/RY/RZ.
std::vector<quantum::GateOp> angle_encode(std::span<const double> values, std::size_t n_qubits,
                                          quantum::GateKind rotation = quantum::GateKind::RY);

/// x -> 2 pi (x - lo) / (hi - lo), clamped to [0, 2 pi]. ConfigError if hi <= lo.
std::vector<double> normalize_to_angle(std::span<const double> raw, double lo, double hi);

}  // namespace qcae::ansatz
