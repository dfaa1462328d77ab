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

#include "spinqft/synth.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "spinqft/errors.hpp"

namespace spinqft::synth {

using ir::Circuit;
using ir::Gate;
using ir::GateKind;
using ir::Qubit;

namespace {

constexpr std::array<std::string_view, 3> kLevelNames = {"logical", "xor", "elementary"};
constexpr std::array<std::string_view, 2> kXorModeNames = {"ideal", "physical"};

void require_distinct(Qubit a, Qubit b, const char* what) {
  if (a == b) {
    throw InvalidArgument(std::string(what) + " needs two distinct qubits, got " + std::to_string(a) + " twice");
  }
}

// The emitters below append in application order; the physical sequences are
// written right-to-left in the literature and are reversed here once.

void emit_xor(std::vector<Gate>& out, Qubit j, Qubit k, XorMode mode) {
  if (mode == XorMode::Ideal) {
    out.push_back(Gate::xor_gate(j, k));
    return;
  }
  const DyadicAngle quarter_turn = DyadicAngle::pi_over_pow2(1);
  out.push_back(Gate::ry(j, quarter_turn));
  out.push_back(Gate::ising(j, k, DyadicAngle::pi_over_pow2(2)));
  out.push_back(Gate::rz(j, quarter_turn.negated()));
  out.push_back(Gate::rz(k, quarter_turn.negated()));
  out.push_back(Gate::ry(j, quarter_turn.negated()));
}

void emit_cphase(std::vector<Gate>& out, Qubit j, Qubit k, const DyadicAngle& theta, XorMode mode) {
  const DyadicAngle half = theta.halved();
  emit_xor(out, j, k, mode);
  out.push_back(Gate::rz(j, half));
  emit_xor(out, j, k, mode);
  out.push_back(Gate::rz(j, half.negated()));
  out.push_back(Gate::phi(k, theta.quartered()));
  out.push_back(Gate::rz(k, half.negated()));
}

void emit_swap(std::vector<Gate>& out, Qubit a, Qubit b, XorMode mode) {
  emit_xor(out, b, a, mode);
  emit_xor(out, a, b, mode);
  emit_xor(out, b, a, mode);
}

Circuit wrap(std::size_t width, const std::vector<Gate>& gates, ir::Stage stage) {
  Circuit circuit(width, stage);
  for (const Gate& g : gates) circuit.append(g);
  return circuit;
}

Circuit build_truncated_qft(std::size_t n, std::size_t max_distance_exclusive, bool include_bit_reversal) {
  Circuit circuit(n, ir::Stage::Synthesized);
  for (std::size_t jj = n; jj-- > 0;) {
    const auto j = static_cast<Qubit>(jj);
    for (std::size_t k = n - 1; k > jj; --k) {
      const std::size_t distance = k - jj;
      if (distance >= max_distance_exclusive) continue;
      circuit.append(Gate::cphase(j, static_cast<Qubit>(k), DyadicAngle::pi_over_pow2(distance)));
    }
    circuit.append(Gate::h(j));
  }
  if (include_bit_reversal) {
    for (std::size_t i = 0; i < n / 2; ++i) {
      circuit.append(Gate::swap(static_cast<Qubit>(i), static_cast<Qubit>(n - 1 - i)));
    }
  }
  return circuit;
}

}  // namespace

std::string_view level_name(LoweringLevel level) { return kLevelNames[static_cast<std::size_t>(level)]; }

std::optional<LoweringLevel> level_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kLevelNames.size(); ++i) {
    if (kLevelNames[i] == name) return static_cast<LoweringLevel>(i);
  }
  return std::nullopt;
}

std::string_view xor_mode_name(XorMode mode) { return kXorModeNames[static_cast<std::size_t>(mode)]; }

std::optional<XorMode> xor_mode_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kXorModeNames.size(); ++i) {
    if (kXorModeNames[i] == name) return static_cast<XorMode>(i);
  }
  return std::nullopt;
}

Circuit build_qft(std::size_t n, bool include_bit_reversal) {
  if (n == 0) throw InvalidArgument("build_qft: n must be at least 1");
  return build_truncated_qft(n, n, include_bit_reversal);
}

Circuit build_aqft(std::size_t n, std::size_t m, bool include_bit_reversal) {
  if (n == 0) throw InvalidArgument("build_aqft: n must be at least 1");
  if (m < 1 || m > n) {
    throw InvalidArgument("build_aqft: cutoff m must satisfy 1 <= m <= n, got m=" + std::to_string(m) +
                          " for n=" + std::to_string(n));
  }
  return build_truncated_qft(n, m, include_bit_reversal);
}

Circuit lower_xor(Qubit target, Qubit control) {
  require_distinct(target, control, "lower_xor");
  std::vector<Gate> gates;
  emit_xor(gates, target, control, XorMode::Physical);
  return wrap(std::max(target, control) + 1, gates, ir::Stage::Lowered);
}

Circuit lower_cphase(Qubit target, Qubit control, const DyadicAngle& theta, XorMode mode) {
  require_distinct(target, control, "lower_cphase");
  std::vector<Gate> gates;
  emit_cphase(gates, target, control, theta, mode);
  return wrap(std::max(target, control) + 1, gates, ir::Stage::Lowered);
}

Circuit lower_swap(Qubit a, Qubit b, XorMode mode) {
  require_distinct(a, b, "lower_swap");
  std::vector<Gate> gates;
  emit_swap(gates, a, b, mode);
  return wrap(std::max(a, b) + 1, gates, ir::Stage::Lowered);
}

Circuit lower_circuit(const Circuit& circuit, LoweringLevel level, XorMode mode) {
  Circuit out(circuit.num_qubits(), ir::Stage::Lowered);
  if (level == LoweringLevel::Logical) {
    out.append(circuit);
    return out;
  }
  const XorMode xor_mode = level == LoweringLevel::Elementary ? XorMode::Physical : mode;
  std::vector<Gate> gates;
  for (const Gate& gate : circuit) {
    switch (gate.kind()) {
      case GateKind::CPhase:
        emit_cphase(gates, gate.target(), gate.control(), *gate.angle(), xor_mode);
        break;
      case GateKind::Swap:
        emit_swap(gates, gate.target(), gate.control(), xor_mode);
        break;
      case GateKind::Xor:
        emit_xor(gates, gate.target(), gate.control(), xor_mode);
        break;
      default:
        gates.push_back(gate);
    }
  }
  for (Gate& g : gates) out.append(std::move(g));
  return out;
}

Circuit lower_swaps(const Circuit& circuit, XorMode mode) {
  Circuit out(circuit.num_qubits(), ir::Stage::Lowered);
  std::vector<Gate> gates;
  for (const Gate& gate : circuit) {
    if (gate.kind() == GateKind::Swap) {
      emit_swap(gates, gate.target(), gate.control(), mode);
    } else {
      gates.push_back(gate);
    }
  }
  for (Gate& g : gates) out.append(std::move(g));
  return out;
}

}  // namespace spinqft::synth
