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
#include <string>

namespace qcae::quantum {

enum class GateKind { H, CNOT, RX, RY, RZ, ZZ };

/// True for the rotation-generated kinds (RX, RY, RZ, ZZ) that carry an angle.
constexpr bool is_rotation(GateKind kind) noexcept {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
         kind == GateKind::ZZ;
}

constexpr bool is_two_qubit(GateKind kind) noexcept {
  return kind == GateKind::CNOT || kind == GateKind::ZZ;
}

std::string to_string(GateKind kind);

/// One concrete gate. Rotations follow the half-angle convention
/// R_G(theta) = exp(-i theta/2 G); ZZ(theta) = exp(-i theta/2 Z(x)Z).
/// For CNOT, `first` is the control and `second` the target.
struct GateOp {
  GateKind kind = GateKind::H;
  std::size_t first = 0;
  std::size_t second = 0;
  double angle = 0.0;

  static GateOp h(std::size_t q) { return {GateKind::H, q, 0, 0.0}; }
  static GateOp cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, control, target, 0.0};
  }
  static GateOp rx(std::size_t q, double theta) { return {GateKind::RX, q, 0, theta}; }
  static GateOp ry(std::size_t q, double theta) { return {GateKind::RY, q, 0, theta}; }
  static GateOp rz(std::size_t q, double theta) { return {GateKind::RZ, q, 0, theta}; }
  static GateOp zz(std::size_t a, std::size_t b, double theta) {
    return {GateKind::ZZ, a, b, theta};
  }

  std::size_t arity() const noexcept { return is_two_qubit(kind) ? 2 : 1; }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

}  // namespace qcae::quantum
