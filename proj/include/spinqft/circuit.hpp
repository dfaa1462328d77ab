// Copyright 2026 The spinqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file circuit.hpp
 * @brief Gate alphabet and circuit container shared by every pass.
 *
 * The alphabet is the one available on nuclear-spin register chains: the
 * Hadamard, the two RF rotations Ry/Rz, the scalar phase Phi, the
 * controlled-phase C, the exchange-coupling gate D (called Ising here), and
 * the logical XOR and SWAP that later passes expand.
 *
 * Two-qubit gates store the TARGET index first and the CONTROL second.
 * Circuits store gates in application order: gates.front() acts first.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinqft/dyadic.hpp"

namespace spinqft::ir {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  H,
  Ry,
  Rz,
  GlobalPhase,
  CPhase,
  Ising,
  Xor,
  Swap,
};

inline constexpr std::size_t kNumGateKinds = 8;

inline constexpr std::array<GateKind, kNumGateKinds> kAllGateKinds = {
    GateKind::H,      GateKind::Ry,    GateKind::Rz,  GateKind::GlobalPhase,
    GateKind::CPhase, GateKind::Ising, GateKind::Xor, GateKind::Swap,
};

/// Serialized name ("H", "Ry", "Rz", "Phi", "CPhase", "Ising", "Xor", "Swap").
std::string_view kind_name(GateKind kind);
/// Inverse of kind_name; nullopt on an unknown name.
std::optional<GateKind> kind_from_name(std::string_view name);

constexpr bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CPhase || kind == GateKind::Ising || kind == GateKind::Xor ||
         kind == GateKind::Swap;
}

constexpr bool has_angle(GateKind kind) {
  return kind != GateKind::H && kind != GateKind::Xor && kind != GateKind::Swap;
}

/**
 * One gate of the alphabet. Immutable after construction; build through the
 * named factories, which enforce arity, index distinctness and angle presence.
 */
class Gate {
 public:
  static Gate h(Qubit q);
  static Gate ry(Qubit q, DyadicAngle theta);
  static Gate rz(Qubit q, DyadicAngle alpha);
  /// Phi_q(delta): the scalar e^{i delta}. The index is kept for traceability.
  static Gate phi(Qubit q, DyadicAngle delta);
  static Gate cphase(Qubit target, Qubit control, DyadicAngle theta);
  static Gate ising(Qubit target, Qubit control, DyadicAngle theta);
  /// Flips `target` when `control` is 1.
  static Gate xor_gate(Qubit target, Qubit control);
  static Gate swap(Qubit a, Qubit b);

  /// Generic constructor used by deserialization; validates like the factories.
  static Gate make(GateKind kind, std::span<const Qubit> qubits, std::optional<DyadicAngle> angle);

  GateKind kind() const { return kind_; }
  std::size_t arity() const { return is_two_qubit(kind_) ? 2 : 1; }
  std::span<const Qubit> qubits() const { return {qubits_.data(), arity()}; }
  Qubit target() const { return qubits_[0]; }
  /// Second index of a two-qubit gate.
  Qubit control() const { return qubits_[1]; }
  bool acts_on(Qubit q) const;
  Qubit max_qubit() const;

  /// Present exactly for the angle-carrying kinds.
  const std::optional<DyadicAngle>& angle() const { return angle_; }

  /// Same gate with its qubits remapped through `mapping` (mapping[old] = new).
  Gate relabeled(std::span<const Qubit> mapping) const;

  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, Qubit a, Qubit b, std::optional<DyadicAngle> angle);

  GateKind kind_;
  std::array<Qubit, 2> qubits_;
  std::optional<DyadicAngle> angle_;
};

enum class Stage : std::uint8_t { Synthesized, Lowered, Routed, Reduced };

std::string_view stage_name(Stage stage);
std::optional<Stage> stage_from_name(std::string_view name);

/// Fixed-width register plus gates in application order.
class Circuit {
 public:
  /// Throws InvalidArgument for zero qubits.
  explicit Circuit(std::size_t num_qubits, Stage stage = Stage::Synthesized);

  std::size_t num_qubits() const { return num_qubits_; }
  Stage stage() const { return stage_; }
  void set_stage(Stage stage) { stage_ = stage; }

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  /// Appends in application order. Throws IndexError when the gate touches a
  /// qubit >= num_qubits().
  void append(Gate gate);
  void append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_;
  Stage stage_;
  std::vector<Gate> gates_;
};

/// Per-kind gate counts; every kind is present (zero when absent).
class GateCensus {
 public:
  std::size_t operator[](GateKind kind) const { return counts_[static_cast<std::size_t>(kind)]; }
  std::size_t& operator[](GateKind kind) { return counts_[static_cast<std::size_t>(kind)]; }
  std::size_t total() const;
  /// "CPhase: 3, H: 3" style listing of the non-zero kinds.
  std::string to_string() const;

  friend bool operator==(const GateCensus&, const GateCensus&) = default;

 private:
  std::array<std::size_t, kNumGateKinds> counts_{};
};

GateCensus gate_census(const Circuit& circuit);

}  // namespace spinqft::ir
