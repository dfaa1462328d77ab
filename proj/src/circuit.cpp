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

#include "spinqft/circuit.hpp"

#include <algorithm>
#include <numeric>

#include "spinqft/errors.hpp"

namespace spinqft::ir {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kKindNames = {
    "H", "Ry", "Rz", "Phi", "CPhase", "Ising", "Xor", "Swap",
};

constexpr std::array<std::string_view, 4> kStageNames = {
    "synthesized", "lowered", "routed", "reduced",
};

}  // namespace

std::string_view kind_name(GateKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return kAllGateKinds[i];
  }
  return std::nullopt;
}

std::string_view stage_name(Stage stage) { return kStageNames[static_cast<std::size_t>(stage)]; }

std::optional<Stage> stage_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kStageNames.size(); ++i) {
    if (kStageNames[i] == name) return static_cast<Stage>(i);
  }
  return std::nullopt;
}

Gate::Gate(GateKind kind, Qubit a, Qubit b, std::optional<DyadicAngle> angle)
    : kind_(kind), qubits_{a, b}, angle_(std::move(angle)) {
  if (is_two_qubit(kind) && a == b) {
    throw InvalidArgument(std::string(kind_name(kind)) + " needs two distinct qubits, got " +
                          std::to_string(a) + " twice");
  }
  if (has_angle(kind) != angle_.has_value()) {
    throw InvalidArgument(std::string(kind_name(kind)) +
                          (angle_ ? " does not take an angle" : " requires an angle"));
  }
}

Gate Gate::h(Qubit q) { return Gate(GateKind::H, q, q, std::nullopt); }
Gate Gate::ry(Qubit q, DyadicAngle theta) { return Gate(GateKind::Ry, q, q, std::move(theta)); }
Gate Gate::rz(Qubit q, DyadicAngle alpha) { return Gate(GateKind::Rz, q, q, std::move(alpha)); }
Gate Gate::phi(Qubit q, DyadicAngle delta) { return Gate(GateKind::GlobalPhase, q, q, std::move(delta)); }

Gate Gate::cphase(Qubit target, Qubit control, DyadicAngle theta) {
  return Gate(GateKind::CPhase, target, control, std::move(theta));
}

Gate Gate::ising(Qubit target, Qubit control, DyadicAngle theta) {
  return Gate(GateKind::Ising, target, control, std::move(theta));
}

Gate Gate::xor_gate(Qubit target, Qubit control) { return Gate(GateKind::Xor, target, control, std::nullopt); }
Gate Gate::swap(Qubit a, Qubit b) { return Gate(GateKind::Swap, a, b, std::nullopt); }

Gate Gate::make(GateKind kind, std::span<const Qubit> qubits, std::optional<DyadicAngle> angle) {
  const std::size_t want = is_two_qubit(kind) ? 2 : 1;
  if (qubits.size() != want) {
    throw InvalidArgument(std::string(kind_name(kind)) + " takes " + std::to_string(want) +
                          " qubit index(es), got " + std::to_string(qubits.size()));
  }
  return Gate(kind, qubits[0], qubits[want - 1], std::move(angle));
}

bool Gate::acts_on(Qubit q) const {
  const auto qs = qubits();
  return std::find(qs.begin(), qs.end(), q) != qs.end();
}

Qubit Gate::max_qubit() const { return std::max(qubits_[0], qubits_[1]); }

Gate Gate::relabeled(std::span<const Qubit> mapping) const {
  Gate out = *this;
  out.qubits_[0] = mapping[qubits_[0]];
  out.qubits_[1] = mapping[qubits_[1]];
  return out;
}

std::string Gate::to_string() const {
  std::string out(kind_name(kind_));
  if (angle_) out += "(" + angle_->to_string() + ")";
  out += "[" + std::to_string(qubits_[0]);
  if (arity() == 2) out += "," + std::to_string(qubits_[1]);
  return out + "]";
}

Circuit::Circuit(std::size_t num_qubits, Stage stage) : num_qubits_(num_qubits), stage_(stage) {
  if (num_qubits == 0) throw InvalidArgument("Circuit must have at least 1 qubit");
}

void Circuit::append(Gate gate) {
  if (gate.max_qubit() >= num_qubits_) {
    throw IndexError(gate.to_string() + " is out of range for a " + std::to_string(num_qubits_) +
                     "-qubit circuit");
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw IndexError("cannot append a " + std::to_string(other.num_qubits_) + "-qubit circuit to a " +
                     std::to_string(num_qubits_) + "-qubit one");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t GateCensus::total() const { return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}); }

std::string GateCensus::to_string() const {
  std::string out;
  for (const GateKind kind : kAllGateKinds) {
    if ((*this)[kind] == 0) continue;
    if (!out.empty()) out += ", ";
    out += std::string(kind_name(kind)) + ": " + std::to_string((*this)[kind]);
  }
  return "{" + out + "}";
}

GateCensus gate_census(const Circuit& circuit) {
  GateCensus census;
  for (const Gate& gate : circuit) ++census[gate.kind()];
  return census;
}

}  // namespace spinqft::ir
